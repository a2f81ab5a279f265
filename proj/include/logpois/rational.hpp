#pragma once

#include <gmpxx.h>

namespace logpois {

/* Exact scalars over Q. mpq_class is kept canonical (reduced, positive
 * denominator, zero = 0/1) by every gmp operation, which is the invariant
 * the rest of the engine relies on. */
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace logpois
