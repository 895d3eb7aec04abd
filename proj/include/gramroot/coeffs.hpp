#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gramroot/rational.hpp"

namespace gramroot {

enum class Kind { Sqrt, InvSqrt };
enum class Method { TSE, CPE1, CPE2, PAE };

/// Conditioning classes the tabulated Chebyshev coefficients cover; each names
/// a lower bound on n0 (the inverse condition number of the scaled matrix).
enum class N0Class { n1e1, n5e2, n1e2, n5e3, n1e3 };

double n0_class_bound(N0Class c);
const char* n0_class_name(N0Class c); // "1e-1", "5e-2", ...
std::optional<N0Class> parse_n0_class(const std::string& s);
/// Largest class whose bound is <= n0 (nullopt if n0 < 1e-3).
std::optional<N0Class> n0_class_for(double n0);

const char* kind_name(Kind k);     // "sqrt", "invsqrt"
const char* method_name(Method m); // "tse", "cpe1", "cpe2", "pae"
std::optional<Kind> parse_kind(const std::string& s);
std::optional<Method> parse_method(const std::string& s);

/// One set of expansion coefficients c_0..c_order. For CPE the raw c_0 is
/// stored; evaluators halve the first term. `exact` carries the rational
/// values when the generator is exact (TSE, PAE, tabulated CPE), else empty.
struct CoeffVector {
    Method method = Method::TSE;
    Kind kind = Kind::Sqrt;
    double n0 = 0.0; // CPE only
    std::vector<double> values;
    std::vector<Rational> exact;

    int order() const { return static_cast<int>(values.size()) - 1; }
};

/// Taylor coefficients of sqrt/invsqrt about x = 1 by the exact rational
/// recurrence; beyond the exact range the floating recurrence continues and
/// `exact` stays truncated to the representable prefix.
CoeffVector tse_coefficients(Kind kind, int order);

/// Chebyshev series coefficients on [n0, 1] by cosine-substitution midpoint
/// quadrature with compensated summation; the point count starts at
/// 64*(order+1) and doubles until two passes agree to 1e-12 absolute.
CoeffVector cpe_coefficients(Kind kind, double n0, int order);

/// The 20 tabulated rational coefficients for a conditioning class.
CoeffVector cpe_tabulated(Kind kind, N0Class cls);

/// Tabulated truncation order reaching relative error delta on [bound, 1];
/// nullopt where the table has no entry (callers fall back to
/// cpe_order_bound with matrix-specific coefficients).
std::optional<int> cpe_order(Kind kind, N0Class cls, double delta);

/// Smallest order whose coefficient tail bound gives relative error <= delta
/// on [n0, 1]; the computed-coefficient fallback for untabulated cells.
int cpe_order_bound(Kind kind, double n0, double delta, int max_order = 2000);

/// Pade coefficients for sqrt/invsqrt at x = 1; exact, and identical for both
/// kinds (numerator and denominator swap roles).
CoeffVector pae_coefficients(Kind kind, int order);

/// Scalar evaluation with the same arithmetic the matrix paths use: Horner in
/// (x-1) for TSE, forward three-term recurrence with halved first term for
/// CPE, numerator/denominator Horner for PAE.
double eval_scalar(const CoeffVector& c, double x);

} // namespace gramroot
