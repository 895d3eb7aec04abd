#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace gramroot {

struct Triplet {
    std::int64_t row;
    std::int64_t col;
    double value;
};

/// Sparse symmetric matrix in canonical form: only the lower triangle is
/// stored (col <= row), rows compressed, columns sorted ascending within each
/// row, duplicates summed and exact zeros dropped. The mirrored upper
/// triangle is implied, so A = A^T holds bit-exactly by construction.
class SparseSymMatrix {
public:
    SparseSymMatrix() = default;

    /// Triplets may address either triangle (or both); (i,j) and (j,i) are
    /// accumulated into the same canonical entry.
    static SparseSymMatrix from_triplets(std::int64_t dim, std::span<const Triplet> entries,
                                         bool spd_asserted = false);
    static SparseSymMatrix identity(std::int64_t n);
    static SparseSymMatrix diagonal(std::span<const double> d);

    std::int64_t dim() const { return dim_; }
    std::int64_t nnz() const { return static_cast<std::int64_t>(val_.size()); }
    bool spd_asserted() const { return spd_asserted_; }

    const std::vector<std::int64_t>& row_ptr() const { return row_ptr_; }
    const std::vector<std::int32_t>& cols() const { return col_; }
    const std::vector<double>& values() const { return val_; }

    /// y = A x (both triangles applied).
    void matvec(const double* x, double* y) const;
    std::vector<double> matvec(std::span<const double> x) const;

    bool operator==(const SparseSymMatrix&) const = default;

private:
    std::int64_t dim_ = 0;
    std::vector<std::int64_t> row_ptr_{0};
    std::vector<std::int32_t> col_;
    std::vector<double> val_;
    bool spd_asserted_ = false;
};

} // namespace gramroot
