#pragma once

#include <cstdint>
#include <vector>

#include "gramroot/sparse.hpp"

namespace gramroot {

/// General dense matrix, row-major.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::int64_t rows, std::int64_t cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols), 0.0) {}

    static DenseMatrix identity(std::int64_t n);

    std::int64_t rows() const { return rows_; }
    std::int64_t cols() const { return cols_; }

    double& operator()(std::int64_t i, std::int64_t j) {
        return a_[static_cast<std::size_t>(i * cols_ + j)];
    }
    double operator()(std::int64_t i, std::int64_t j) const {
        return a_[static_cast<std::size_t>(i * cols_ + j)];
    }
    double* row(std::int64_t i) { return a_.data() + i * cols_; }
    const double* row(std::int64_t i) const { return a_.data() + i * cols_; }
    std::vector<double>& data() { return a_; }
    const std::vector<double>& data() const { return a_; }

    DenseMatrix transposed() const;
    void fill(double v);
    void add_scaled_identity(double c); // A += c*I (square only)
    void scale(double c);

    bool operator==(const DenseMatrix&) const = default;

private:
    std::int64_t rows_ = 0;
    std::int64_t cols_ = 0;
    std::vector<double> a_;
};

/// Dense symmetric matrix; full square storage, symmetrized on construction.
class DenseSymMatrix {
public:
    DenseSymMatrix() = default;
    explicit DenseSymMatrix(std::int64_t dim) : m_(dim, dim) {}

    /// Validates that A is symmetric to 1e-13 relative (of the largest entry
    /// magnitude), then averages the two triangles.
    static DenseSymMatrix from_dense(DenseMatrix a, double rel_tol = 1e-13);
    /// Averages the triangles without the validation gate; for results that
    /// are symmetric by theory and only carry rounding noise.
    static DenseSymMatrix symmetrized(DenseMatrix a);
    static DenseSymMatrix from_sparse(const SparseSymMatrix& s);
    static DenseSymMatrix identity(std::int64_t n);

    std::int64_t dim() const { return m_.rows(); }
    double operator()(std::int64_t i, std::int64_t j) const { return m_(i, j); }
    const DenseMatrix& mat() const { return m_; }
    DenseMatrix& mat() { return m_; }

private:
    DenseMatrix m_;
};

// C = A*B and C += alpha*A*B
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
void matmul_acc(DenseMatrix& c, double alpha, const DenseMatrix& a, const DenseMatrix& b);

/// C = alpha * S * B for sparse symmetric S; the workhorse of the matrix
/// polynomial recurrences.
void spmm(DenseMatrix& c, double alpha, const SparseSymMatrix& s, const DenseMatrix& b);

/// Solves A X = B for SPD A by Cholesky; B is overwritten with X.
void cholesky_solve_inplace(const DenseMatrix& a, DenseMatrix& b);

/// Largest singular value by power iteration on A^T A. Sign-proof for
/// symmetric indefinite inputs; returns the best estimate if the relative
/// change never reaches tol (metric helper, not a convergence contract).
double spectral_norm_dense(const DenseMatrix& a, double tol = 1e-12, int max_iter = 50000,
                           std::uint64_t seed = 0x9e3779b97f4a7c15ULL);

} // namespace gramroot
