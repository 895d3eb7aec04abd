#include "gramroot/rng.hpp"

#include "gramroot/kernels.hpp"

namespace gramroot {

std::vector<double> random_unit_vector(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<double> x(n);
    for (double& v : x) v = 2.0 * u01(rng) - 1.0;
    const double norm = kernels::nrm2(x.data(), n);
    if (norm > 0.0) kernels::scal(1.0 / norm, x.data(), n);
    else if (n > 0) x[0] = 1.0;
    return x;
}

} // namespace gramroot
