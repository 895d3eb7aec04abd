#include "gramroot/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace gramroot::kernels {

namespace scalar {

double dot(const double* x, const double* y, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc = std::fma(x[i], y[i], acc);
    return acc;
}

void axpy(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] = std::fma(a, x[i], y[i]);
}

void scal(double a, double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

void rot(double* x, double* y, double c, double s, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double xi = x[i];
        const double yi = y[i];
        x[i] = std::fma(c, xi, -(s * yi));
        y[i] = std::fma(s, xi, c * yi);
    }
}

double gather_dot(const double* v, const std::int32_t* idx, std::size_t n, const double* x) {
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) acc = std::fma(v[k], x[idx[k]], acc);
    return acc;
}

} // namespace scalar

namespace {

struct Dispatch {
    Isa isa;
    double (*dot)(const double*, const double*, std::size_t);
    void (*axpy)(double, const double*, double*, std::size_t);
    void (*scal)(double, double*, std::size_t);
    void (*rot)(double*, double*, double, double, std::size_t);
    double (*gather_dot)(const double*, const std::int32_t*, std::size_t, const double*);
};

constexpr Dispatch kScalar{Isa::scalar, &scalar::dot,  &scalar::axpy,
                           &scalar::scal, &scalar::rot, &scalar::gather_dot};

Dispatch resolve() {
    const char* force = std::getenv("GRAMROOT_SIMD");
    if (force != nullptr) {
        if (std::strcmp(force, "scalar") == 0) return kScalar;
#if defined(__x86_64__) || defined(_M_X64)
        if (std::strcmp(force, "avx2") == 0 && avx2::supported())
            return {Isa::avx2, &avx2::dot, &avx2::axpy, &avx2::scal, &avx2::rot, &avx2::gather_dot};
#endif
#if defined(__aarch64__)
        if (std::strcmp(force, "neon") == 0 && neon::supported())
            return {Isa::neon, &neon::dot, &neon::axpy, &neon::scal, &neon::rot, &neon::gather_dot};
#endif
        return kScalar; // unknown or unsupported value: fall back
    }
#if defined(__x86_64__) || defined(_M_X64)
    if (avx2::supported())
        return {Isa::avx2, &avx2::dot, &avx2::axpy, &avx2::scal, &avx2::rot, &avx2::gather_dot};
#endif
#if defined(__aarch64__)
    if (neon::supported())
        return {Isa::neon, &neon::dot, &neon::axpy, &neon::scal, &neon::rot, &neon::gather_dot};
#endif
    return kScalar;
}

const Dispatch& table() {
    static const Dispatch d = resolve();
    return d;
}

} // namespace

Isa active_isa() { return table().isa; }

const char* isa_name(Isa isa) {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
        case Isa::neon: return "neon";
    }
    return "unknown";
}

double dot(const double* x, const double* y, std::size_t n) { return table().dot(x, y, n); }

void axpy(double a, const double* x, double* y, std::size_t n) { table().axpy(a, x, y, n); }

void scal(double a, double* x, std::size_t n) { table().scal(a, x, n); }

void rot(double* x, double* y, double c, double s, std::size_t n) { table().rot(x, y, c, s, n); }

double gather_dot(const double* v, const std::int32_t* idx, std::size_t n, const double* x) {
    return table().gather_dot(v, idx, n, x);
}

} // namespace gramroot::kernels
