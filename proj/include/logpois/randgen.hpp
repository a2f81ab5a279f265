#pragma once

#include <cstdint>

#include "logpois/bipoly.hpp"

namespace logpois {

/* splitmix64; fixed across platforms so seeded failures reproduce anywhere */
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    int in_range(int lo, int hi) {  // inclusive
        return lo + int(below(std::uint64_t(hi - lo + 1)));
    }
};

/* Uniform sparse polynomial: up to max_terms monomials drawn uniformly
 * from {(i,j) : i + j <= max_degree}, coefficients uniform in +-1..9.
 * Colliding monomials accumulate, so the result may have fewer terms. */
inline BiPoly random_poly(SplitMix64& rng, int max_degree, int max_terms = 4) {
    BiPoly p;
    int terms = rng.in_range(1, max_terms);
    for (int t = 0; t < terms; ++t) {
        int count = (max_degree + 1) * (max_degree + 2) / 2;
        int index = int(rng.below(std::uint64_t(count)));
        int d = 0;
        while (index >= d + 1) {
            index -= d + 1;
            ++d;
        }
        int mag = rng.in_range(1, 9);
        int sign = rng.below(2) == 0 ? 1 : -1;
        p.add_term({index, d - index}, Rational(sign * mag));
    }
    return p;
}

}  // namespace logpois
