// NEON kernel variants for aarch64, where 128-bit SIMD is baseline.

#if defined(__aarch64__)

#include "gramroot/kernels.hpp"

#include <arm_neon.h>

namespace gramroot::kernels::neon {

bool supported() { return true; }

double dot(const double* x, const double* y, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = vfmaq_f64(acc0, vld1q_f64(x + i), vld1q_f64(y + i));
        acc1 = vfmaq_f64(acc1, vld1q_f64(x + i + 2), vld1q_f64(y + i + 2));
    }
    if (i + 2 <= n) {
        acc0 = vfmaq_f64(acc0, vld1q_f64(x + i), vld1q_f64(y + i));
        i += 2;
    }
    double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
    for (; i < n; ++i) acc = __builtin_fma(x[i], y[i], acc);
    return acc;
}

void axpy(double a, const double* x, double* y, std::size_t n) {
    const float64x2_t va = vdupq_n_f64(a);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(x + i)));
    for (; i < n; ++i) y[i] = __builtin_fma(a, x[i], y[i]);
}

void scal(double a, double* x, std::size_t n) {
    const float64x2_t va = vdupq_n_f64(a);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_f64(x + i, vmulq_f64(va, vld1q_f64(x + i)));
    for (; i < n; ++i) x[i] *= a;
}

void rot(double* x, double* y, double c, double s, std::size_t n) {
    const float64x2_t vc = vdupq_n_f64(c);
    const float64x2_t vs = vdupq_n_f64(s);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t vx = vld1q_f64(x + i);
        const float64x2_t vy = vld1q_f64(y + i);
        vst1q_f64(x + i, vfmaq_f64(vnegq_f64(vmulq_f64(vs, vy)), vc, vx));
        vst1q_f64(y + i, vfmaq_f64(vmulq_f64(vc, vy), vs, vx));
    }
    for (; i < n; ++i) {
        const double xi = x[i];
        const double yi = y[i];
        x[i] = __builtin_fma(c, xi, -(s * yi));
        y[i] = __builtin_fma(s, xi, c * yi);
    }
}

double gather_dot(const double* v, const std::int32_t* idx, std::size_t n, const double* x) {
    // No gather instruction; vectorize the multiply-accumulate on loaded pairs.
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        const float64x2_t vx = {x[idx[k]], x[idx[k + 1]]};
        acc = vfmaq_f64(acc, vld1q_f64(v + k), vx);
    }
    double a = vaddvq_f64(acc);
    for (; k < n; ++k) a = __builtin_fma(v[k], x[idx[k]], a);
    return a;
}

} // namespace gramroot::kernels::neon

#endif // aarch64
