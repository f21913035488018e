#pragma once

#include <vector>

#include "z2lab/cmat.hpp"

namespace z2lab {

// Eigen- or singular values sorted descending.
struct Spectrum {
    std::vector<double> values;
};

struct EigResult {
    Spectrum spectrum;  // real eigenvalues, descending
    CMat basis;         // unitary U with H = U diag(spectrum) U^*
};

// Cyclic Jacobi for complex Hermitian matrices.  Converges when the
// off-diagonal Frobenius mass drops below tol * ||H||_F; at most 100 sweeps.
// Throws InputError for non-square input or Hermitian defect above
// tol^(1/2)-ish gate (see eig.cpp), Error if the sweep cap is hit.
EigResult hermitian_eig(const CMat& h, double tol = 1e-13);

// Singular values of m, descending: sqrt of eigenvalues of m^* m, negatives
// clamped to zero.
Spectrum singular_values(const CMat& m);

double trace_norm(const CMat& m);  // sum of singular values
double op_norm(const CMat& m);     // largest singular value

// |m| = (m^* m)^(1/2), PSD, defined for any shape (cols x cols result).
CMat matrix_abs(const CMat& m);

// Square root of a PSD Hermitian matrix.  Eigenvalues below -tol*||h||_F
// are rejected; small negatives are clamped to zero.
CMat psd_sqrt(const CMat& h, double tol = 1e-10);

// A <= B in the PSD order: min eigenvalue of B - A >= -tol.  Inputs must be
// Hermitian (within 1e-10 relative).
bool psd_leq(const CMat& a, const CMat& b, double tol);

}  // namespace z2lab
