#pragma once

#include "qfb/cmat.hpp"

namespace qfb {

struct HermEig {
    std::vector<double> values;  // ascending
    CMat vectors;                // unitary, k-th column belongs to values[k]
};

/// Hermitian eigendecomposition by cyclic Jacobi rotations. Input must be
/// Hermitian within 1e-12 (contract_error otherwise); throws numeric_error
/// with the residual attached if the sweeps fail to converge.
HermEig herm_eig(const CMat& m);

/// Hermitian PSD square root via herm_eig. Eigenvalues in [-1e-10, 0) are
/// clipped to zero; anything below -1e-10 raises not_psd_error carrying the
/// offending eigenvalue.
CMat psd_sqrt(const CMat& m);

/// Kronecker product, (a kron b)[i*db + k, j*db + l] = a(i,j) * b(k,l).
CMat kron(const CMat& a, const CMat& b);

/// Solve a x = rhs by LU with partial pivoting. A pivot below 1e-14 raises
/// singular_error.
cvec solve_linear(const CMat& a, const cvec& rhs);

/// Column-stacking vectorization: vec(m)[j*dim + i] = m(i, j). The fixed
/// global convention; superoperator assembly depends on it.
cvec vec(const CMat& m);
CMat unvec(const cvec& v, int dim);

/// Matrix-vector product for superoperator application.
cvec mat_vec(const CMat& a, const cvec& x);

double norm_inf(const cvec& v);

/// Trace distance (1/2)||a - b||_1 between Hermitian matrices.
double trace_distance(const CMat& a, const CMat& b);

}  // namespace qfb
