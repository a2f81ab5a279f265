#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "logpois/rational.hpp"

namespace logpois {

/* Raised by quotient computations when an alleged image vector is not in
 * the kernel span; reaching it means a differential is broken (d od != 0). */
struct ImageNotInKernel : std::logic_error {
    using std::logic_error::logic_error;
};

/* Sparse rational vector, entries sorted by index, zeros never stored. */
struct SparseVec {
    int dim = 0;
    std::vector<std::pair<int, Rational>> entries;

    static SparseVec unit(int dim, int index);
    bool is_zero() const { return entries.empty(); }
    Rational at(int index) const;
    void add(int index, const Rational& value);
};

/* Sparse exact-rational matrix; row-major storage. */
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), row_data_(std::size_t(rows)) {
        for (auto& r : row_data_) r.dim = cols;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    void add(int r, int c, const Rational& v);
    Rational entry(int r, int c) const { return row_data_[std::size_t(r)].at(c); }
    const SparseVec& row(int r) const { return row_data_[std::size_t(r)]; }

    std::vector<SparseVec> columns() const;
    SparseVec column(int c) const;
    RatMatrix transpose() const;
    SparseVec apply(const SparseVec& v) const;  // M * v
    std::size_t nnz() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<SparseVec> row_data_;
};

/* Basis of Ker M: independent vectors annihilated by M, count = cols - rank.
 * Vectors are primitive integer-scaled with first nonzero entry positive,
 * ordered by ascending free column, so output is bit-reproducible. */
struct KernelBasis {
    std::vector<SparseVec> vectors;
    int dimension() const { return int(vectors.size()); }
};

int rank(const RatMatrix& m);
KernelBasis kernel(const RatMatrix& m);

/* Incremental column-span sieve over integer echelon rows. Used for
 * membership tests and for picking complement representatives without
 * re-running full eliminations. */
class IncrementalSpan {
public:
    explicit IncrementalSpan(int dim) : dim_(dim) {}

    bool contains(const SparseVec& v) const;
    bool insert(const SparseVec& v);  // true if the rank grew
    int rank() const { return int(rows_by_lead_.size()); }
    int dim() const { return dim_; }

private:
    using IntRow = std::vector<std::pair<int, Integer>>;
    IntRow reduce(IntRow r) const;

    int dim_;
    std::map<int, IntRow> rows_by_lead_;
};

bool membership(const SparseVec& v, const std::vector<SparseVec>& image);

/* dim(kernel span / image span); every image vector must lie in the kernel
 * span (that is d od = 0), otherwise ImageNotInKernel. */
int quotient_dim(const KernelBasis& kernel, const std::vector<SparseVec>& image);

/* Kernel vectors independent modulo the image span, in kernel order;
 * count always equals quotient_dim. */
std::vector<SparseVec> complement_basis(const KernelBasis& kernel,
                                        const std::vector<SparseVec>& image);

}  // namespace logpois
