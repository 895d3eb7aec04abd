#pragma once

#include <vector>

#include "gramroot/dense.hpp"
#include "gramroot/sparse.hpp"

namespace gramroot {

/// Symmetric eigendecomposition A = V diag(values) V^T, eigenvalues ascending,
/// columns of `vectors` orthonormal.
struct EigDecomposition {
    std::vector<double> values;
    DenseMatrix vectors;
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius mass is below
/// 1e-14 * ‖A‖_F.
EigDecomposition eig_sym(const DenseSymMatrix& a);

DenseSymMatrix reference_sqrt(const DenseSymMatrix& a);
DenseSymMatrix reference_invsqrt(const DenseSymMatrix& a);

/// ‖num - ref‖₂ / ‖ref‖₂, both norms by power iteration.
double relative_error(const DenseSymMatrix& num, const DenseSymMatrix& ref);

/// Eigenvalues of the pencil (T, G) for SPD G, computed as the ordinary
/// eigenvalues of invsqrt(G) * T * invsqrt(G); ascending.
std::vector<double> generalized_eigs(const DenseSymMatrix& t, const SparseSymMatrix& g);

} // namespace gramroot
