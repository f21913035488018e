#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "z2lab/cmat.hpp"

namespace z2lab {

// Ordered family (C_1..C_d) of n x n matrices, optionally tagged with
// distinct integer frequencies.
struct MatrixTuple {
    std::vector<CMat> mats;
    std::optional<std::vector<std::int64_t>> frequencies;

    int count() const { return static_cast<int>(mats.size()); }
    int dim() const { return mats.empty() ? 0 : mats.front().rows; }
    void validate() const;  // uniform square shapes, distinct frequencies
};

// max( ||sum C_i^* C_i||^(1/2), ||sum C_i C_i^*||^(1/2) )
double sinfty_rc_norm(const MatrixTuple& t);

CMat column_gram(const MatrixTuple& t);  // sum C_i^* C_i
CMat row_gram(const MatrixTuple& t);     // sum C_i C_i^*

struct UpperResult {
    double value = 0.0;
    // decomposition C_i = Y_i + Z_i achieving the value:
    // Tr(sum Y^*Y)^(1/2) + Tr(sum ZZ^*)^(1/2)
    MatrixTuple y;
    MatrixTuple z;
};

// Upper bound on ||.||_{S_1(l2_rc)}: best of the all-column, all-row and
// scalar-split decompositions, optionally refined by alternating
// reweighted least squares.  Always a true upper bound: the value is
// evaluated from the decomposition it returns.
UpperResult s1_rc_upper(const MatrixTuple& t, bool refine = true);

struct AscentOptions {
    int iterations = 500;
    int restarts = 8;
    std::uint64_t seed = 42;
    double step = 0.1;
    double decay = 0.97;
};

struct LowerResult {
    double value = 0.0;
    MatrixTuple certificate;  // feasible: sinfty_rc_norm(X) <= 1 (+eps)
    int restart_index = -1;   // -1 marks the balanced certificate
};

// Lower bound by duality: |Tr sum C_i X_i| at a feasible X family.
// Supergradient ascent with feasibility rescaling after every step; the
// balanced certificate X_i = C_i^* / c^(1/2) is always evaluated too.
LowerResult s1_rc_lower(const MatrixTuple& t, const AscentOptions& opt = {});

struct NormBracket {
    double lower = 0.0;
    double upper = 0.0;
    bool converged = false;  // (upper - lower) <= tol * upper
    MatrixTuple dual_certificate;
    MatrixTuple primal_y;
    MatrixTuple primal_z;
    int restart_index = -1;
};

// Certified bracket for ||.||_{S_1(l2_rc)}.  Ascent is skipped when the
// candidate decompositions and the balanced certificate already close the
// bracket within tol.
NormBracket s1_rc_norm(const MatrixTuple& t, double tol, const AscentOptions& opt = {});

}  // namespace z2lab
