#include "gramroot/iterative.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gramroot/errors.hpp"
#include "gramroot/kernels.hpp"

namespace gramroot {

namespace {

// Rayleigh-quotient power iteration on a generic symmetric apply.
template <typename Apply>
NormEstimate rayleigh_iterate(Apply&& apply, std::size_t n, double tol, int max_iter,
                              std::uint64_t seed, const char* what) {
    if (tol <= 0.0) throw ValidationError(std::string(what) + ": tolerance must be positive");
    std::vector<double> x = random_unit_vector(n, seed);
    std::vector<double> y(n);
    double nu_prev = 0.0;
    double nu = 0.0;
    double res = 1.0;
    for (int it = 1; it <= max_iter; ++it) {
        apply(x.data(), y.data());
        nu = kernels::dot(x.data(), y.data(), n);
        res = std::abs(nu - nu_prev) / std::max(std::abs(nu), 1e-300);
        if (it >= 2 && res <= tol) return {std::abs(nu), it, res};
        nu_prev = nu;
        const double ny = kernels::nrm2(y.data(), n);
        if (ny == 0.0) return {0.0, it, 0.0}; // x in the null space of a zero operator
        kernels::scal(1.0 / ny, y.data(), n);
        x.swap(y);
    }
    throw ConvergenceError(std::string(what) + ": no convergence within " +
                               std::to_string(max_iter) + " iterations (residual " +
                               std::to_string(res) + ")",
                           std::abs(nu), res, max_iter);
}

} // namespace

NormEstimate spectral_norm(const SparseSymMatrix& a, double tol, int max_iter, std::uint64_t seed) {
    return rayleigh_iterate([&](const double* x, double* y) { a.matvec(x, y); },
                            static_cast<std::size_t>(a.dim()), tol, max_iter, seed,
                            "spectral_norm");
}

NormEstimate min_eigenvalue(const SparseSymMatrix& a, double tol, int max_iter,
                            std::uint64_t seed) {
    const double cg_tol = std::max(0.01 * tol, 1e-14);
    const int cg_iters = std::max(10 * static_cast<int>(a.dim()), 1000);
    auto apply_inverse = [&](const double* x, double* y) {
        std::span<const double> xs{x, static_cast<std::size_t>(a.dim())};
        std::vector<double> sol = cg_solve(a, xs, cg_tol, cg_iters);
        std::copy(sol.begin(), sol.end(), y);
    };
    // Power iteration on A^{-1}; its dominant eigenvalue is 1/lambda_min.
    NormEstimate inv = rayleigh_iterate(apply_inverse, static_cast<std::size_t>(a.dim()), tol,
                                        max_iter, seed, "min_eigenvalue");
    if (inv.value == 0.0)
        throw ConvergenceError("min_eigenvalue: inverse iterate vanished", 0.0, inv.residual,
                               inv.iterations);
    return {1.0 / inv.value, inv.iterations, inv.residual};
}

namespace detail {

std::vector<double> cg_solve_impl(const std::function<void(const double*, double*)>& apply,
                                  std::span<const double> b, double tol, int max_iter) {
    if (tol <= 0.0) throw ValidationError("cg_solve: tolerance must be positive");
    const std::size_t n = b.size();
    std::vector<double> x(n, 0.0);
    const double bnorm = kernels::nrm2(b.data(), n);
    if (bnorm == 0.0) return x;

    std::vector<double> r(b.begin(), b.end());
    std::vector<double> p = r;
    std::vector<double> ap(n);
    double rr = kernels::dot(r.data(), r.data(), n);
    double rel = std::sqrt(rr) / bnorm;
    for (int it = 0; it < max_iter; ++it) {
        if (rel <= tol) return x;
        apply(p.data(), ap.data());
        const double pap = kernels::dot(p.data(), ap.data(), n);
        if (pap <= 0.0)
            throw ValidationError("cg_solve: matrix is not positive definite (p'Ap = " +
                                  std::to_string(pap) + ")");
        const double alpha = rr / pap;
        kernels::axpy(alpha, p.data(), x.data(), n);
        kernels::axpy(-alpha, ap.data(), r.data(), n);
        const double rr_new = kernels::dot(r.data(), r.data(), n);
        const double beta = rr_new / rr;
        rr = rr_new;
        rel = std::sqrt(rr) / bnorm;
        for (std::size_t i = 0; i < n; ++i) p[i] = r[i] + beta * p[i];
    }
    if (rel <= tol) return x;
    throw ConvergenceError("cg_solve: no convergence within " + std::to_string(max_iter) +
                               " iterations (relative residual " + std::to_string(rel) + ")",
                           rel, rel, max_iter);
}

} // namespace detail

std::vector<double> cg_solve(const SparseSymMatrix& a, std::span<const double> b, double tol,
                             int max_iter) {
    if (static_cast<std::int64_t>(b.size()) != a.dim())
        throw ValidationError("cg_solve: right-hand side length does not match dimension");
    return detail::cg_solve_impl([&](const double* x, double* y) { a.matvec(x, y); }, b, tol,
                                 max_iter);
}

} // namespace gramroot
