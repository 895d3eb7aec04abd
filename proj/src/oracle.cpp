#include "gramroot/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "gramroot/errors.hpp"
#include "gramroot/kernels.hpp"

namespace gramroot {

namespace {

double offdiag_frobenius_sq(const DenseMatrix& a) {
    double s = 0.0;
    for (std::int64_t i = 0; i < a.rows(); ++i)
        for (std::int64_t j = 0; j < i; ++j) s += 2.0 * a(i, j) * a(i, j);
    return s;
}

// f(A) = V diag(f(values)) V^T from a decomposition.
template <typename F>
DenseSymMatrix assemble_function(const EigDecomposition& eig, F&& f) {
    const std::int64_t n = eig.vectors.rows();
    DenseMatrix w = eig.vectors; // w(:,k) = f(lambda_k) * v_k
    for (std::int64_t k = 0; k < n; ++k) {
        const double fk = f(eig.values[static_cast<std::size_t>(k)]);
        for (std::int64_t i = 0; i < n; ++i) w(i, k) *= fk;
    }
    // result = W * V^T
    DenseMatrix r(n, n);
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j)
            r(i, j) = kernels::dot(w.row(i), eig.vectors.row(j), static_cast<std::size_t>(n));
    return DenseSymMatrix::symmetrized(std::move(r));
}

} // namespace

EigDecomposition eig_sym(const DenseSymMatrix& sym) {
    const std::int64_t n = sym.dim();
    DenseMatrix a = sym.mat();
    DenseMatrix v = DenseMatrix::identity(n);

    double fro_sq = 0.0;
    for (const double x : a.data()) fro_sq += x * x;
    const double off_target_sq = 1e-28 * fro_sq; // (1e-14 * ‖A‖_F)^2
    constexpr int kMaxSweeps = 60;

    int sweep = 0;
    for (; sweep < kMaxSweeps; ++sweep) {
        if (offdiag_frobenius_sq(a) <= off_target_sq) break;
        for (std::int64_t p = 0; p < n - 1; ++p)
            for (std::int64_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double app = a(p, p);
                const double aqq = a(q, q);
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                // rows p and q (contiguous), then mirror into the columns
                kernels::rot(a.row(p), a.row(q), c, s, static_cast<std::size_t>(n));
                for (std::int64_t k = 0; k < n; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                kernels::rot(v.row(p), v.row(q), c, s, static_cast<std::size_t>(n));
            }
    }
    if (sweep == kMaxSweeps && offdiag_frobenius_sq(a) > off_target_sq)
        throw ConvergenceError("eig_sym: Jacobi sweeps exhausted",
                               std::sqrt(offdiag_frobenius_sq(a)), 0.0, kMaxSweeps);

    std::vector<std::int64_t> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::int64_t i, std::int64_t j) { return a(i, i) < a(j, j); });

    EigDecomposition eig;
    eig.values.resize(static_cast<std::size_t>(n));
    eig.vectors = DenseMatrix(n, n);
    for (std::int64_t k = 0; k < n; ++k) {
        eig.values[static_cast<std::size_t>(k)] = a(order[static_cast<std::size_t>(k)],
                                                    order[static_cast<std::size_t>(k)]);
        // rows of V accumulate the rotations, so eigenvector k is row order[k]
        for (std::int64_t i = 0; i < n; ++i)
            eig.vectors(i, k) = v(order[static_cast<std::size_t>(k)], i);
    }
    return eig;
}

DenseSymMatrix reference_sqrt(const DenseSymMatrix& a) {
    EigDecomposition eig = eig_sym(a);
    if (eig.values.front() <= 0.0)
        throw ValidationError("reference_sqrt: matrix is not positive definite (min eigenvalue " +
                              std::to_string(eig.values.front()) + ")");
    return assemble_function(eig, [](double x) { return std::sqrt(x); });
}

DenseSymMatrix reference_invsqrt(const DenseSymMatrix& a) {
    EigDecomposition eig = eig_sym(a);
    if (eig.values.front() <= 0.0)
        throw ValidationError("reference_invsqrt: matrix is not positive definite (min eigenvalue " +
                              std::to_string(eig.values.front()) + ")");
    return assemble_function(eig, [](double x) { return 1.0 / std::sqrt(x); });
}

double relative_error(const DenseSymMatrix& num, const DenseSymMatrix& ref) {
    if (num.dim() != ref.dim()) throw ValidationError("relative_error: dimension mismatch");
    const double ref_norm = spectral_norm_dense(ref.mat());
    if (ref_norm == 0.0) throw ValidationError("relative_error: reference norm is zero");
    DenseMatrix diff = num.mat();
    const std::vector<double>& r = ref.mat().data();
    for (std::size_t i = 0; i < r.size(); ++i) diff.data()[i] -= r[i];
    return spectral_norm_dense(diff) / ref_norm;
}

std::vector<double> generalized_eigs(const DenseSymMatrix& t, const SparseSymMatrix& g) {
    if (t.dim() != g.dim()) throw ValidationError("generalized_eigs: dimension mismatch");
    DenseSymMatrix gisqrt = reference_invsqrt(DenseSymMatrix::from_sparse(g));
    DenseMatrix m = matmul(gisqrt.mat(), matmul(t.mat(), gisqrt.mat()));
    return eig_sym(DenseSymMatrix::symmetrized(std::move(m))).values;
}

} // namespace gramroot
