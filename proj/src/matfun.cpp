#include "gramroot/matfun.hpp"

#include <cmath>
#include <string>

#include "gramroot/errors.hpp"
#include "gramroot/iterative.hpp"
#include "gramroot/kernels.hpp"

namespace gramroot {

namespace {

constexpr int kNormMaxIter = 5000;

void subtract_inplace(DenseMatrix& a, const DenseMatrix& b) {
    kernels::axpy(-1.0, b.data().data(), a.data().data(), a.data().size());
}

// p(X) for TSE: Horner in (X - I).
DenseMatrix tse_dense(const ScaledOperand& x, const CoeffVector& c) {
    const std::int64_t n = x.g->dim();
    const int order = c.order();
    DenseMatrix r(n, n);
    r.add_scaled_identity(c.values[static_cast<std::size_t>(order)]);
    DenseMatrix tmp;
    for (int k = order - 1; k >= 0; --k) {
        spmm(tmp, 1.0 / x.norm, *x.g, r);
        subtract_inplace(tmp, r);
        tmp.add_scaled_identity(c.values[static_cast<std::size_t>(k)]);
        r = std::move(tmp);
    }
    return r;
}

// p(X) for CPE: forward three-term recurrence, two live terms, halved c_0.
DenseMatrix cpe_dense(const ScaledOperand& x, const CoeffVector& c) {
    const std::int64_t n = x.g->dim();
    const int order = c.order();
    const double a = 2.0 / ((1.0 - c.n0) * x.norm); // W = a*G + b*I on the unscaled G
    const double b = -(1.0 + c.n0) / (1.0 - c.n0);
    auto apply_w = [&](const DenseMatrix& m, DenseMatrix& out) {
        spmm(out, a, *x.g, m);
        kernels::axpy(b, m.data().data(), out.data().data(), out.data().size());
    };

    DenseMatrix sum(n, n);
    sum.add_scaled_identity(0.5 * c.values[0]);
    if (order == 0) return sum;

    DenseMatrix t_prev = DenseMatrix::identity(n);
    DenseMatrix t_cur;
    apply_w(t_prev, t_cur); // T_1 = W
    kernels::axpy(c.values[1], t_cur.data().data(), sum.data().data(), sum.data().size());
    DenseMatrix t_next;
    for (int k = 2; k <= order; ++k) {
        apply_w(t_cur, t_next);
        t_next.scale(2.0);
        subtract_inplace(t_next, t_prev);
        kernels::axpy(c.values[static_cast<std::size_t>(k)], t_next.data().data(),
                      sum.data().data(), sum.data().size());
        t_prev = std::move(t_cur);
        t_cur = std::move(t_next);
    }
    return sum;
}

// Numerator/denominator polynomials of the Pade form: E(X) = sum c_n X^n,
// O(X) = sum c_n X^(order-n), both by Horner with sparse products.
DenseMatrix pae_poly_dense(const ScaledOperand& x, const CoeffVector& c, bool reversed) {
    const std::int64_t n = x.g->dim();
    const int order = c.order();
    auto coef = [&](int k) {
        return c.values[static_cast<std::size_t>(reversed ? order - k : k)];
    };
    DenseMatrix r(n, n);
    r.add_scaled_identity(coef(order));
    DenseMatrix tmp;
    for (int k = order - 1; k >= 0; --k) {
        spmm(tmp, 1.0 / x.norm, *x.g, r);
        tmp.add_scaled_identity(coef(k));
        r = std::move(tmp);
    }
    return r;
}

DenseMatrix pae_dense(const ScaledOperand& x, const CoeffVector& c, Kind kind) {
    DenseMatrix even = pae_poly_dense(x, c, false);
    DenseMatrix odd = pae_poly_dense(x, c, true);
    // sqrt(X) ~ O^{-1} E, invsqrt(X) ~ E^{-1} O; both polynomials are SPD for
    // SPD X (positive coefficients).
    if (kind == Kind::Sqrt) {
        cholesky_solve_inplace(odd, even);
        return even;
    }
    cholesky_solve_inplace(even, odd);
    return odd;
}

// --- vector paths ---

std::vector<double> tse_apply(const ScaledOperand& x, const CoeffVector& c,
                              std::span<const double> v) {
    const std::size_t n = v.size();
    const int order = c.order();
    std::vector<double> r(n);
    std::vector<double> gx(n);
    for (std::size_t i = 0; i < n; ++i)
        r[i] = c.values[static_cast<std::size_t>(order)] * v[i];
    for (int k = order - 1; k >= 0; --k) {
        x.g->matvec(r.data(), gx.data());
        const double ck = c.values[static_cast<std::size_t>(k)];
        for (std::size_t i = 0; i < n; ++i) r[i] = gx[i] / x.norm - r[i] + ck * v[i];
    }
    return r;
}

std::vector<double> cpe_apply(const ScaledOperand& x, const CoeffVector& c,
                              std::span<const double> v) {
    const std::size_t n = v.size();
    const int order = c.order();
    const double a = 2.0 / ((1.0 - c.n0) * x.norm);
    const double b = -(1.0 + c.n0) / (1.0 - c.n0);
    std::vector<double> gx(n);
    auto apply_w = [&](const std::vector<double>& in, std::vector<double>& out) {
        x.g->matvec(in.data(), gx.data());
        for (std::size_t i = 0; i < n; ++i) out[i] = a * gx[i] + b * in[i];
    };
    // Clenshaw downward recurrence
    std::vector<double> b1(n, 0.0), b2(n, 0.0), w(n), tmp(n);
    for (int k = order; k >= 1; --k) {
        apply_w(b1, w);
        const double ck = c.values[static_cast<std::size_t>(k)];
        for (std::size_t i = 0; i < n; ++i) tmp[i] = ck * v[i] + 2.0 * w[i] - b2[i];
        b2.swap(b1);
        b1.swap(tmp);
    }
    apply_w(b1, w);
    std::vector<double> r(n);
    const double half_c0 = 0.5 * c.values[0];
    for (std::size_t i = 0; i < n; ++i) r[i] = half_c0 * v[i] + w[i] - b2[i];
    return r;
}

std::vector<double> pae_poly_apply(const ScaledOperand& x, const CoeffVector& c, bool reversed,
                                   std::span<const double> v) {
    const std::size_t n = v.size();
    const int order = c.order();
    auto coef = [&](int k) {
        return c.values[static_cast<std::size_t>(reversed ? order - k : k)];
    };
    std::vector<double> r(n);
    std::vector<double> gx(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = coef(order) * v[i];
    for (int k = order - 1; k >= 0; --k) {
        x.g->matvec(r.data(), gx.data());
        const double ck = coef(k);
        for (std::size_t i = 0; i < n; ++i) r[i] = gx[i] / x.norm + ck * v[i];
    }
    return r;
}

std::vector<double> pae_apply(const ScaledOperand& x, const CoeffVector& c, Kind kind,
                              std::span<const double> v) {
    const bool num_reversed = kind != Kind::Sqrt;
    std::vector<double> rhs = pae_poly_apply(x, c, num_reversed, v);
    auto apply_den = [&](const double* in, double* out) {
        std::span<const double> s{in, v.size()};
        std::vector<double> r = pae_poly_apply(x, c, !num_reversed, s);
        std::copy(r.begin(), r.end(), out);
    };
    const int max_iter = 10000 + 10 * static_cast<int>(x.g->dim());
    return cg_solve_apply(apply_den, std::span<const double>{rhs}, 1e-12, max_iter);
}

} // namespace

ScaledOperand scale_operand(const SparseSymMatrix& g, const ExpansionSpec& spec, double tol_norm) {
    ScaledOperand x;
    x.g = &g;
    x.norm = spec.norm_hint ? *spec.norm_hint
                            : spectral_norm(g, tol_norm, kNormMaxIter, spec.seed).value;
    if (!(x.norm > 0.0)) throw ValidationError("matfun: spectral norm estimate is not positive");
    return x;
}

double computed_n0(const ScaledOperand& x, double tol) {
    const double lam_min = min_eigenvalue(*x.g, tol, kNormMaxIter).value;
    const double n0 = 0.95 * lam_min / x.norm;
    if (!(n0 > 0.0 && n0 < 1.0))
        throw ValidationError("matfun: computed n0 = " + std::to_string(n0) +
                              " outside (0, 1); matrix is not SPD or estimates failed");
    return n0;
}

CoeffVector resolve_coefficients(const ScaledOperand& x, const ExpansionSpec& spec,
                                 double tol_norm) {
    switch (spec.method) {
        case Method::TSE:
            return tse_coefficients(spec.kind, spec.order);
        case Method::CPE1: {
            const double n0 = spec.n0 ? *spec.n0 : computed_n0(x, tol_norm);
            return cpe_coefficients(spec.kind, n0, spec.order);
        }
        case Method::CPE2: {
            if (!spec.n0_class)
                throw ValidationError("matfun: CPE-2 requires an n0 class");
            if (spec.strict_n0) {
                const double actual = computed_n0(x, tol_norm) / 0.95;
                if (actual < n0_class_bound(*spec.n0_class))
                    throw ValidationError(
                        "matfun: scaled spectrum bound " + std::to_string(actual) +
                        " violates CPE-2 class n0 >= " + n0_class_name(*spec.n0_class));
            }
            CoeffVector c = cpe_tabulated(spec.kind, *spec.n0_class);
            if (spec.order > c.order())
                throw ValidationError("matfun: CPE-2 order " + std::to_string(spec.order) +
                                      " exceeds tabulated order " + std::to_string(c.order()));
            c.values.resize(static_cast<std::size_t>(spec.order) + 1);
            c.exact.resize(static_cast<std::size_t>(spec.order) + 1);
            return c;
        }
        case Method::PAE:
            return pae_coefficients(spec.kind, spec.order);
    }
    throw ValidationError("matfun: unknown method");
}

DenseSymMatrix matfun_dense(const SparseSymMatrix& g, const ExpansionSpec& spec, double tol_norm) {
    if (spec.order < 0) throw ValidationError("matfun: order must be >= 0");
    const ScaledOperand x = scale_operand(g, spec, tol_norm);
    const CoeffVector c = resolve_coefficients(x, spec, tol_norm);

    DenseMatrix p;
    switch (spec.method) {
        case Method::TSE: p = tse_dense(x, c); break;
        case Method::CPE1:
        case Method::CPE2: p = cpe_dense(x, c); break;
        case Method::PAE: p = pae_dense(x, c, spec.kind); break;
    }
    const double factor =
        spec.kind == Kind::Sqrt ? std::sqrt(x.norm) : 1.0 / std::sqrt(x.norm);
    p.scale(factor);
    return DenseSymMatrix::symmetrized(std::move(p));
}

std::vector<double> matfun_apply(const SparseSymMatrix& g, std::span<const double> v,
                                 const ExpansionSpec& spec, double tol_norm) {
    if (static_cast<std::int64_t>(v.size()) != g.dim())
        throw ValidationError("matfun_apply: vector length does not match dimension");
    if (spec.order < 0) throw ValidationError("matfun: order must be >= 0");
    const ScaledOperand x = scale_operand(g, spec, tol_norm);
    const CoeffVector c = resolve_coefficients(x, spec, tol_norm);

    std::vector<double> r;
    switch (spec.method) {
        case Method::TSE: r = tse_apply(x, c, v); break;
        case Method::CPE1:
        case Method::CPE2: r = cpe_apply(x, c, v); break;
        case Method::PAE: r = pae_apply(x, c, spec.kind, v); break;
    }
    const double factor =
        spec.kind == Kind::Sqrt ? std::sqrt(x.norm) : 1.0 / std::sqrt(x.norm);
    kernels::scal(factor, r.data(), r.size());
    return r;
}

DenseMatrix normalize_operator(const DenseMatrix& t, const SparseSymMatrix& g_left,
                               const SparseSymMatrix& g_right, ExpansionSpec spec,
                               double tol_norm) {
    if (t.rows() != g_left.dim() || t.cols() != g_right.dim())
        throw ValidationError("normalize_operator: dimension mismatch");
    spec.kind = Kind::InvSqrt;
    const DenseSymMatrix left = matfun_dense(g_left, spec, tol_norm);
    if (&g_left == &g_right || g_left == g_right)
        return matmul(left.mat(), matmul(t, left.mat()));
    const DenseSymMatrix right = matfun_dense(g_right, spec, tol_norm);
    return matmul(left.mat(), matmul(t, right.mat()));
}

} // namespace gramroot
