#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gramroot/coeffs.hpp"
#include "gramroot/dense.hpp"
#include "gramroot/rng.hpp"
#include "gramroot/sparse.hpp"

namespace gramroot {

/// Which expansion to run and with what parameters. The spectral scaling
/// X = G/‖G‖₂ is always applied internally; norm_hint skips the power-method
/// estimate when the norm is known exactly (diagnostics and tests).
struct ExpansionSpec {
    Method method = Method::TSE;
    Kind kind = Kind::Sqrt;
    int order = 0;
    std::optional<double> n0;          // CPE-1 interval bound; computed when absent
    std::optional<N0Class> n0_class;   // CPE-2 coefficient class
    bool strict_n0 = false;            // CPE-2: verify the class bound (costs an eigensolve)
    std::optional<double> norm_hint;
    std::uint64_t seed = kDefaultSeed;
};

/// G together with its estimated spectral norm; the scaled operand
/// X = G/norm is applied implicitly, never materialized.
struct ScaledOperand {
    const SparseSymMatrix* g = nullptr;
    double norm = 0.0;
};

ScaledOperand scale_operand(const SparseSymMatrix& g, const ExpansionSpec& spec,
                            double tol_norm = 1e-10);

/// The CPE-1 interval bound for the scaled operand: smallest eigenvalue of
/// G/‖G‖₂, shrunk by 0.95 against estimation error.
double computed_n0(const ScaledOperand& x, double tol = 1e-10);

/// Coefficients the spec resolves to, with CPE-1 n0 computed when absent and
/// the CPE-2 class bound verified when strict_n0 is set.
CoeffVector resolve_coefficients(const ScaledOperand& x, const ExpansionSpec& spec,
                                 double tol_norm = 1e-10);

/// sqrt(G) or invsqrt(G) as a dense matrix via the chosen expansion.
DenseSymMatrix matfun_dense(const SparseSymMatrix& g, const ExpansionSpec& spec,
                            double tol_norm = 1e-10);

/// f(G)·v without densifying G: vector recurrences for TSE/CPE, conjugate
/// gradients against the denominator polynomial for PAE.
std::vector<double> matfun_apply(const SparseSymMatrix& g, std::span<const double> v,
                                 const ExpansionSpec& spec, double tol_norm = 1e-10);

/// invsqrt(G_left) * T * invsqrt(G_right); spec.kind is forced to InvSqrt.
DenseMatrix normalize_operator(const DenseMatrix& t, const SparseSymMatrix& g_left,
                               const SparseSymMatrix& g_right, ExpansionSpec spec,
                               double tol_norm = 1e-10);

} // namespace gramroot
