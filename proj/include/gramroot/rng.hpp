#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace gramroot {

inline constexpr std::uint64_t kDefaultSeed = 0x9e3779b97f4a7c15ULL;

/// Uniform double in [0, 1). Derived from the raw engine output instead of
/// std::uniform_real_distribution so that streams are identical across
/// standard libraries.
inline double u01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Deterministic start vector for the power methods: entries in [-1, 1),
/// normalized to unit length.
std::vector<double> random_unit_vector(std::size_t n, std::uint64_t seed);

} // namespace gramroot
