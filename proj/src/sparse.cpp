#include "gramroot/sparse.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "gramroot/errors.hpp"
#include "gramroot/kernels.hpp"

namespace gramroot {

SparseSymMatrix SparseSymMatrix::from_triplets(std::int64_t dim, std::span<const Triplet> entries,
                                               bool spd_asserted) {
    if (dim <= 0) throw ValidationError("matrix dimension must be positive");
    if (dim > std::numeric_limits<std::int32_t>::max())
        throw ValidationError("matrix dimension exceeds index range");

    struct Entry {
        std::int64_t row;
        std::int64_t col;
        double value;
    };
    std::vector<Entry> lower;
    lower.reserve(entries.size());
    for (const Triplet& t : entries) {
        if (t.row < 0 || t.row >= dim || t.col < 0 || t.col >= dim)
            throw ValidationError("triplet index out of range: (" + std::to_string(t.row) + ", " +
                                  std::to_string(t.col) + ") for dim " + std::to_string(dim));
        lower.push_back({std::max(t.row, t.col), std::min(t.row, t.col), t.value});
    }
    std::sort(lower.begin(), lower.end(), [](const Entry& a, const Entry& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });

    SparseSymMatrix m;
    m.dim_ = dim;
    m.spd_asserted_ = spd_asserted;
    m.row_ptr_.assign(static_cast<std::size_t>(dim) + 1, 0);

    std::size_t i = 0;
    while (i < lower.size()) {
        const std::int64_t r = lower[i].row;
        const std::int64_t c = lower[i].col;
        double sum = 0.0;
        while (i < lower.size() && lower[i].row == r && lower[i].col == c) sum += lower[i++].value;
        if (sum != 0.0) {
            m.col_.push_back(static_cast<std::int32_t>(c));
            m.val_.push_back(sum);
            ++m.row_ptr_[static_cast<std::size_t>(r) + 1];
        }
    }
    for (std::int64_t r = 0; r < dim; ++r)
        m.row_ptr_[static_cast<std::size_t>(r) + 1] += m.row_ptr_[static_cast<std::size_t>(r)];
    return m;
}

SparseSymMatrix SparseSymMatrix::identity(std::int64_t n) {
    std::vector<double> d(static_cast<std::size_t>(n), 1.0);
    return diagonal(d);
}

SparseSymMatrix SparseSymMatrix::diagonal(std::span<const double> d) {
    std::vector<Triplet> t;
    t.reserve(d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        t.push_back({static_cast<std::int64_t>(i), static_cast<std::int64_t>(i), d[i]});
    return from_triplets(static_cast<std::int64_t>(d.size()), t, true);
}

void SparseSymMatrix::matvec(const double* x, double* y) const {
    const std::size_t n = static_cast<std::size_t>(dim_);
    std::fill(y, y + n, 0.0);
    for (std::size_t r = 0; r < n; ++r) {
        const std::int64_t b = row_ptr_[r];
        const std::int64_t e = row_ptr_[r + 1];
        y[r] += kernels::gather_dot(val_.data() + b, col_.data() + b,
                                    static_cast<std::size_t>(e - b), x);
        // mirrored upper-triangle contribution (diagonal excluded)
        for (std::int64_t k = b; k < e; ++k) {
            const std::int32_t c = col_[static_cast<std::size_t>(k)];
            if (static_cast<std::size_t>(c) != r)
                y[c] += val_[static_cast<std::size_t>(k)] * x[r];
        }
    }
}

std::vector<double> SparseSymMatrix::matvec(std::span<const double> x) const {
    if (static_cast<std::int64_t>(x.size()) != dim_)
        throw ValidationError("matvec: vector length " + std::to_string(x.size()) +
                              " does not match dimension " + std::to_string(dim_));
    std::vector<double> y(x.size());
    matvec(x.data(), y.data());
    return y;
}

} // namespace gramroot
