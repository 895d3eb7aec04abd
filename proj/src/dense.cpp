#include "gramroot/dense.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gramroot/errors.hpp"
#include "gramroot/kernels.hpp"
#include "gramroot/rng.hpp"

namespace gramroot {

DenseMatrix DenseMatrix::identity(std::int64_t n) {
    DenseMatrix m(n, n);
    for (std::int64_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::transposed() const {
    DenseMatrix t(cols_, rows_);
    for (std::int64_t i = 0; i < rows_; ++i)
        for (std::int64_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

void DenseMatrix::fill(double v) { std::fill(a_.begin(), a_.end(), v); }

void DenseMatrix::add_scaled_identity(double c) {
    if (rows_ != cols_) throw ValidationError("add_scaled_identity: matrix not square");
    for (std::int64_t i = 0; i < rows_; ++i) (*this)(i, i) += c;
}

void DenseMatrix::scale(double c) { kernels::scal(c, a_.data(), a_.size()); }

DenseSymMatrix DenseSymMatrix::from_dense(DenseMatrix a, double rel_tol) {
    if (a.rows() != a.cols()) throw ValidationError("symmetric matrix must be square");
    const std::int64_t n = a.rows();
    double max_abs = 0.0;
    double max_asym = 0.0;
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j <= i; ++j) {
            max_abs = std::max(max_abs, std::abs(a(i, j)));
            max_asym = std::max(max_asym, std::abs(a(i, j) - a(j, i)));
        }
    if (max_asym > rel_tol * std::max(max_abs, 1e-300))
        throw ValidationError("matrix is not symmetric: max asymmetry " +
                              std::to_string(max_asym) + " vs scale " + std::to_string(max_abs));
    return symmetrized(std::move(a));
}

DenseSymMatrix DenseSymMatrix::symmetrized(DenseMatrix a) {
    if (a.rows() != a.cols()) throw ValidationError("symmetric matrix must be square");
    const std::int64_t n = a.rows();
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < i; ++j) {
            const double v = 0.5 * (a(i, j) + a(j, i));
            a(i, j) = v;
            a(j, i) = v;
        }
    DenseSymMatrix s;
    s.m_ = std::move(a);
    return s;
}

DenseSymMatrix DenseSymMatrix::from_sparse(const SparseSymMatrix& s) {
    DenseMatrix a(s.dim(), s.dim());
    const auto& rp = s.row_ptr();
    for (std::int64_t r = 0; r < s.dim(); ++r)
        for (std::int64_t k = rp[static_cast<std::size_t>(r)];
             k < rp[static_cast<std::size_t>(r) + 1]; ++k) {
            const std::int32_t c = s.cols()[static_cast<std::size_t>(k)];
            const double v = s.values()[static_cast<std::size_t>(k)];
            a(r, c) = v;
            a(c, r) = v;
        }
    DenseSymMatrix out;
    out.m_ = std::move(a);
    return out;
}

DenseSymMatrix DenseSymMatrix::identity(std::int64_t n) {
    DenseSymMatrix s;
    s.m_ = DenseMatrix::identity(n);
    return s;
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix c(a.rows(), b.cols());
    matmul_acc(c, 1.0, a, b);
    return c;
}

void matmul_acc(DenseMatrix& c, double alpha, const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows() || c.rows() != a.rows() || c.cols() != b.cols())
        throw ValidationError("matmul: dimension mismatch");
    const std::size_t w = static_cast<std::size_t>(b.cols());
    for (std::int64_t i = 0; i < a.rows(); ++i) {
        double* ci = c.row(i);
        for (std::int64_t k = 0; k < a.cols(); ++k) {
            const double aik = alpha * a(i, k);
            if (aik != 0.0) kernels::axpy(aik, b.row(k), ci, w);
        }
    }
}

void spmm(DenseMatrix& c, double alpha, const SparseSymMatrix& s, const DenseMatrix& b) {
    if (s.dim() != b.rows()) throw ValidationError("spmm: dimension mismatch");
    c = DenseMatrix(s.dim(), b.cols());
    const std::size_t w = static_cast<std::size_t>(b.cols());
    const auto& rp = s.row_ptr();
    for (std::int64_t r = 0; r < s.dim(); ++r)
        for (std::int64_t k = rp[static_cast<std::size_t>(r)];
             k < rp[static_cast<std::size_t>(r) + 1]; ++k) {
            const std::int32_t col = s.cols()[static_cast<std::size_t>(k)];
            const double v = alpha * s.values()[static_cast<std::size_t>(k)];
            kernels::axpy(v, b.row(col), c.row(r), w);
            if (col != r) kernels::axpy(v, b.row(r), c.row(col), w);
        }
}

void cholesky_solve_inplace(const DenseMatrix& a, DenseMatrix& b) {
    if (a.rows() != a.cols() || a.rows() != b.rows())
        throw ValidationError("cholesky_solve: dimension mismatch");
    const std::int64_t n = a.rows();
    DenseMatrix l = a;
    for (std::int64_t j = 0; j < n; ++j) {
        double d = l(j, j) - kernels::dot(l.row(j), l.row(j), static_cast<std::size_t>(j));
        if (!(d > 0.0))
            throw ValidationError("cholesky: matrix is not positive definite (pivot " +
                                  std::to_string(d) + " at " + std::to_string(j) + ")");
        const double ljj = std::sqrt(d);
        l(j, j) = ljj;
        for (std::int64_t i = j + 1; i < n; ++i)
            l(i, j) = (l(i, j) - kernels::dot(l.row(i), l.row(j), static_cast<std::size_t>(j))) / ljj;
    }
    const std::size_t w = static_cast<std::size_t>(b.cols());
    // forward substitution L Y = B, rows of B updated in place
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t k = 0; k < i; ++k) kernels::axpy(-l(i, k), b.row(k), b.row(i), w);
        kernels::scal(1.0 / l(i, i), b.row(i), w);
    }
    // back substitution L^T X = Y
    for (std::int64_t i = n - 1; i >= 0; --i) {
        for (std::int64_t k = i + 1; k < n; ++k) kernels::axpy(-l(k, i), b.row(k), b.row(i), w);
        kernels::scal(1.0 / l(i, i), b.row(i), w);
    }
}

double spectral_norm_dense(const DenseMatrix& a, double tol, int max_iter, std::uint64_t seed) {
    const std::int64_t rows = a.rows();
    const std::int64_t cols = a.cols();
    if (rows == 0 || cols == 0) return 0.0;
    std::vector<double> x = random_unit_vector(static_cast<std::size_t>(cols), seed);
    std::vector<double> ax(static_cast<std::size_t>(rows));
    std::vector<double> y(static_cast<std::size_t>(cols));
    double sigma_prev = 0.0;
    double sigma = 0.0;
    for (int it = 1; it <= max_iter; ++it) {
        for (std::int64_t i = 0; i < rows; ++i)
            ax[static_cast<std::size_t>(i)] =
                kernels::dot(a.row(i), x.data(), static_cast<std::size_t>(cols));
        // y = A^T (A x)
        std::fill(y.begin(), y.end(), 0.0);
        for (std::int64_t i = 0; i < rows; ++i)
            kernels::axpy(ax[static_cast<std::size_t>(i)], a.row(i), y.data(),
                          static_cast<std::size_t>(cols));
        sigma = kernels::nrm2(ax.data(), ax.size());
        const double ny = kernels::nrm2(y.data(), y.size());
        if (ny == 0.0) return 0.0;
        if (it >= 3 && std::abs(sigma - sigma_prev) <= tol * std::max(sigma, 1e-300)) break;
        sigma_prev = sigma;
        kernels::scal(1.0 / ny, y.data(), y.size());
        x.swap(y);
    }
    return sigma;
}

} // namespace gramroot
