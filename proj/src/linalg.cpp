#include "logpois/linalg.hpp"

#include <algorithm>

namespace logpois {

SparseVec SparseVec::unit(int dim, int index) {
    SparseVec v;
    v.dim = dim;
    v.entries.emplace_back(index, Rational(1));
    return v;
}

Rational SparseVec::at(int index) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), index,
                               [](const auto& e, int i) { return e.first < i; });
    return (it != entries.end() && it->first == index) ? it->second : Rational(0);
}

void SparseVec::add(int index, const Rational& value) {
    if (value == 0) return;
    auto it = std::lower_bound(entries.begin(), entries.end(), index,
                               [](const auto& e, int i) { return e.first < i; });
    if (it != entries.end() && it->first == index) {
        it->second += value;
        if (it->second == 0) entries.erase(it);
    } else {
        entries.insert(it, {index, value});
    }
}

void RatMatrix::add(int r, int c, const Rational& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("RatMatrix::add");
    row_data_[std::size_t(r)].add(c, v);
}

std::vector<SparseVec> RatMatrix::columns() const {
    std::vector<SparseVec> cols;
    cols.resize(std::size_t(cols_));
    for (auto& c : cols) c.dim = rows_;
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : row_data_[std::size_t(r)].entries)
            cols[std::size_t(c)].entries.emplace_back(r, v);
    return cols;
}

SparseVec RatMatrix::column(int c) const {
    SparseVec col;
    col.dim = rows_;
    for (int r = 0; r < rows_; ++r) {
        Rational v = row_data_[std::size_t(r)].at(c);
        if (v != 0) col.entries.emplace_back(r, v);
    }
    return col;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : row_data_[std::size_t(r)].entries) t.add(c, r, v);
    return t;
}

SparseVec RatMatrix::apply(const SparseVec& v) const {
    SparseVec out;
    out.dim = rows_;
    for (int r = 0; r < rows_; ++r) {
        Rational acc(0);
        for (const auto& [c, mv] : row_data_[std::size_t(r)].entries) acc += mv * v.at(c);
        if (acc != 0) out.entries.emplace_back(r, acc);
    }
    return out;
}

std::size_t RatMatrix::nnz() const {
    std::size_t n = 0;
    for (const auto& r : row_data_) n += r.entries.size();
    return n;
}

namespace {

using IntRow = std::vector<std::pair<int, Integer>>;

/* clear denominators and strip integer content; sign is preserved */
IntRow to_primitive_int_row(const SparseVec& v) {
    IntRow row;
    if (v.entries.empty()) return row;
    Integer den_lcm(1);
    for (const auto& [i, q] : v.entries) {
        Integer d = q.get_den();
        den_lcm = lcm(den_lcm, d);
    }
    Integer content(0);
    row.reserve(v.entries.size());
    for (const auto& [i, q] : v.entries) {
        Integer z = q.get_num() * (den_lcm / q.get_den());
        content = gcd(content, z);
        row.emplace_back(i, z);
    }
    for (auto& [i, z] : row) z /= content;
    return row;
}

void strip_content(IntRow& row) {
    if (row.empty()) return;
    Integer content(0);
    for (const auto& [i, z] : row) content = gcd(content, z);
    if (content != 1)
        for (auto& [i, z] : row) z /= content;
}

/* r := a*r - b*base, sparse merge over sorted column indices */
IntRow combine(const IntRow& r, const Integer& a, const Integer& b, const IntRow& base) {
    IntRow out;
    out.reserve(r.size() + base.size());
    auto it1 = r.begin();
    auto it2 = base.begin();
    while (it1 != r.end() || it2 != base.end()) {
        if (it2 == base.end() || (it1 != r.end() && it1->first < it2->first)) {
            out.emplace_back(it1->first, a * it1->second);
            ++it1;
        } else if (it1 == r.end() || it2->first < it1->first) {
            out.emplace_back(it2->first, -b * it2->second);
            ++it2;
        } else {
            Integer v = a * it1->second - b * it2->second;
            if (v != 0) out.emplace_back(it1->first, v);
            ++it1;
            ++it2;
        }
    }
    return out;
}

struct Echelon {
    std::vector<IntRow> pivot_rows;  // strictly increasing leading columns
    std::vector<int> pivot_cols;
};

/* Fraction-free row echelon: primitive integer rows, cross-multiply
 * elimination, content stripped after every combination. Pivot choice is
 * the first remaining row with the lowest leading column. */
Echelon echelon_form(const RatMatrix& m) {
    std::vector<IntRow> work;
    work.reserve(std::size_t(m.rows()));
    for (int r = 0; r < m.rows(); ++r) {
        IntRow row = to_primitive_int_row(m.row(r));
        if (!row.empty()) work.push_back(std::move(row));
    }
    Echelon ech;
    for (int c = 0; c < m.cols() && !work.empty(); ++c) {
        std::size_t p = work.size();
        for (std::size_t k = 0; k < work.size(); ++k)
            if (work[k].front().first == c) {
                p = k;
                break;
            }
        if (p == work.size()) continue;
        IntRow pivot = std::move(work[p]);
        work.erase(work.begin() + long(p));
        Integer lead = pivot.front().second;
        std::vector<IntRow> next;
        next.reserve(work.size());
        for (auto& row : work) {
            if (row.front().first == c) {
                IntRow reduced = combine(row, lead, row.front().second, pivot);
                strip_content(reduced);
                if (!reduced.empty()) next.push_back(std::move(reduced));
            } else {
                next.push_back(std::move(row));
            }
        }
        work = std::move(next);
        ech.pivot_cols.push_back(c);
        ech.pivot_rows.push_back(std::move(pivot));
    }
    return ech;
}

/* normalize an exact rational solution vector to a primitive integer vector
 * with positive first nonzero entry */
SparseVec normalize_solution(int dim, const std::vector<Rational>& dense) {
    SparseVec v;
    v.dim = dim;
    for (int i = 0; i < dim; ++i)
        if (dense[std::size_t(i)] != 0) v.entries.emplace_back(i, dense[std::size_t(i)]);
    if (v.entries.empty()) return v;
    Integer den_lcm(1), num_gcd(0);
    for (const auto& [i, q] : v.entries) den_lcm = lcm(den_lcm, Integer(q.get_den()));
    std::vector<Integer> ints;
    ints.reserve(v.entries.size());
    for (const auto& [i, q] : v.entries) {
        ints.push_back(Integer(q.get_num()) * (den_lcm / q.get_den()));
        num_gcd = gcd(num_gcd, ints.back());
    }
    int flip = sgn(ints.front()) < 0 ? -1 : 1;
    for (std::size_t k = 0; k < ints.size(); ++k)
        v.entries[k].second = Rational(ints[k] * flip / num_gcd);
    return v;
}

}  // namespace

int rank(const RatMatrix& m) { return int(echelon_form(m).pivot_cols.size()); }

KernelBasis kernel(const RatMatrix& m) {
    Echelon ech = echelon_form(m);
    KernelBasis basis;
    std::vector<bool> is_pivot(std::size_t(m.cols()), false);
    for (int c : ech.pivot_cols) is_pivot[std::size_t(c)] = true;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[std::size_t(f)]) continue;
        std::vector<Rational> dense(std::size_t(m.cols()), Rational(0));
        dense[std::size_t(f)] = 1;
        // back-substitute pivot rows in reverse pivot order
        for (std::size_t k = ech.pivot_rows.size(); k-- > 0;) {
            const IntRow& row = ech.pivot_rows[k];
            int pc = ech.pivot_cols[k];
            Rational acc(0);
            for (auto it = row.begin() + 1; it != row.end(); ++it)
                acc += Rational(it->second) * dense[std::size_t(it->first)];
            dense[std::size_t(pc)] = -acc / Rational(row.front().second);
        }
        basis.vectors.push_back(normalize_solution(m.cols(), dense));
    }
    return basis;
}

IncrementalSpan::IntRow IncrementalSpan::reduce(IntRow r) const {
    while (!r.empty()) {
        auto it = rows_by_lead_.find(r.front().first);
        if (it == rows_by_lead_.end()) break;
        r = combine(r, it->second.front().second, r.front().second, it->second);
        strip_content(r);
    }
    return r;
}

bool IncrementalSpan::contains(const SparseVec& v) const {
    return reduce(to_primitive_int_row(v)).empty();
}

bool IncrementalSpan::insert(const SparseVec& v) {
    IntRow residual = reduce(to_primitive_int_row(v));
    if (residual.empty()) return false;
    int lead = residual.front().first;
    rows_by_lead_.emplace(lead, std::move(residual));
    return true;
}

bool membership(const SparseVec& v, const std::vector<SparseVec>& image) {
    if (v.is_zero()) return true;
    IncrementalSpan span(v.dim);
    for (const auto& col : image) span.insert(col);
    return span.contains(v);
}

int quotient_dim(const KernelBasis& kernel, const std::vector<SparseVec>& image) {
    int dim = kernel.vectors.empty() ? (image.empty() ? 0 : image.front().dim)
                                     : kernel.vectors.front().dim;
    IncrementalSpan kernel_span(dim);
    for (const auto& v : kernel.vectors) kernel_span.insert(v);
    IncrementalSpan image_span(dim);
    for (const auto& col : image) {
        if (!kernel_span.contains(col))
            throw ImageNotInKernel("image vector outside kernel span (broken differential)");
        image_span.insert(col);
    }
    return kernel.dimension() - image_span.rank();
}

std::vector<SparseVec> complement_basis(const KernelBasis& kernel,
                                        const std::vector<SparseVec>& image) {
    int dim = kernel.vectors.empty() ? (image.empty() ? 0 : image.front().dim)
                                     : kernel.vectors.front().dim;
    IncrementalSpan span(dim);
    for (const auto& col : image) span.insert(col);
    std::vector<SparseVec> reps;
    for (const auto& v : kernel.vectors)
        if (span.insert(v)) reps.push_back(v);
    return reps;
}

}  // namespace logpois
