#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>

// Data-parallel inner loops shared by the whole library. Every kernel has a
// scalar reference implementation plus SIMD variants (AVX2 on x86-64, NEON on
// aarch64) selected once at runtime from CPU capabilities. The environment
// variable GRAMROOT_SIMD=scalar|avx2|neon forces a specific path.
//
// The element-wise kernels (axpy, scal, rot) produce bit-identical results on
// every path: the scalar reference uses single-rounding fused multiply-adds
// matching the SIMD instructions. Reductions (dot, gather_dot) reassociate
// the sum, so they agree only to rounding; the equivalence tests pin both
// contracts.

namespace gramroot::kernels {

enum class Isa { scalar, avx2, neon };

Isa active_isa();
const char* isa_name(Isa isa);

/// dot <- sum_i x[i]*y[i]
double dot(const double* x, const double* y, std::size_t n);

/// y[i] += a*x[i]
void axpy(double a, const double* x, double* y, std::size_t n);

/// x[i] *= a
void scal(double a, double* x, std::size_t n);

/// Plane rotation: (x[i], y[i]) <- (c*x[i] - s*y[i], s*x[i] + c*y[i])
void rot(double* x, double* y, double c, double s, std::size_t n);

/// sum_k v[k]*x[idx[k]] — compressed sparse row segment dot.
double gather_dot(const double* v, const std::int32_t* idx, std::size_t n, const double* x);

inline double nrm2(const double* x, std::size_t n) { return std::sqrt(dot(x, x, n)); }

// Reference path, always available; the equivalence tests compare the
// dispatched kernels against these.
namespace scalar {
double dot(const double* x, const double* y, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
void scal(double a, double* x, std::size_t n);
void rot(double* x, double* y, double c, double s, std::size_t n);
double gather_dot(const double* v, const std::int32_t* idx, std::size_t n, const double* x);
} // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
bool supported();
double dot(const double* x, const double* y, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
void scal(double a, double* x, std::size_t n);
void rot(double* x, double* y, double c, double s, std::size_t n);
double gather_dot(const double* v, const std::int32_t* idx, std::size_t n, const double* x);
} // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {
bool supported();
double dot(const double* x, const double* y, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
void scal(double a, double* x, std::size_t n);
void rot(double* x, double* y, double c, double s, std::size_t n);
double gather_dot(const double* v, const std::int32_t* idx, std::size_t n, const double* x);
} // namespace neon
#endif

} // namespace gramroot::kernels
