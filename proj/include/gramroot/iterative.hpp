#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "gramroot/rng.hpp"
#include "gramroot/sparse.hpp"

namespace gramroot {

struct NormEstimate {
    double value = 0.0;   // eigenvalue magnitude estimate
    int iterations = 0;
    double residual = 0.0; // relative Rayleigh-quotient change at termination
};

/// ‖A‖₂ for symmetric A by power iteration with a seeded random start.
/// Terminates when the relative change of the Rayleigh quotient is <= tol;
/// throws ConvergenceError (carrying the best estimate) after max_iter.
NormEstimate spectral_norm(const SparseSymMatrix& a, double tol = 1e-10, int max_iter = 5000,
                           std::uint64_t seed = kDefaultSeed);

/// Smallest eigenvalue of SPD A by inverse power iteration; the inner solves
/// use cg_solve at 0.01*tol.
NormEstimate min_eigenvalue(const SparseSymMatrix& a, double tol = 1e-10, int max_iter = 5000,
                            std::uint64_t seed = kDefaultSeed);

/// Conjugate gradients for SPD A: returns x with ‖Ax - b‖ <= tol*‖b‖.
std::vector<double> cg_solve(const SparseSymMatrix& a, std::span<const double> b, double tol = 1e-12,
                             int max_iter = 10000);

namespace detail {
std::vector<double> cg_solve_impl(const std::function<void(const double*, double*)>& apply,
                                  std::span<const double> b, double tol, int max_iter);
} // namespace detail

/// Conjugate gradients against an SPD operator given as an apply callback;
/// used where the matrix is a polynomial in a sparse operand and never formed.
template <typename Apply>
std::vector<double> cg_solve_apply(Apply&& apply, std::span<const double> b, double tol = 1e-12,
                                   int max_iter = 10000) {
    return detail::cg_solve_impl(std::function<void(const double*, double*)>(apply), b, tol,
                                 max_iter);
}

} // namespace gramroot
