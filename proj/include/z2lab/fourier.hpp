#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "z2lab/cmat.hpp"
#include "z2lab/rcnorms.hpp"

namespace z2lab {

// Matrix-valued trigonometric polynomial f(t) = sum_i C_i e^{2 pi i k_i t}
// on the circle [0,1); frequencies are mandatory and distinct.
struct TrigMatrixPoly {
    MatrixTuple tuple;

    void validate() const;
    const std::vector<std::int64_t>& freqs() const { return *tuple.frequencies; }
};

CMat eval_poly(const TrigMatrixPoly& p, double t);

struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    long long panels = 0;
    bool converged = false;
};

// Adaptive composite Gauss-Legendre (15-node panels, embedded 7-node error
// estimate, recursive bisection) applied to t -> Tr|f(t)|.  The integrand
// has square-root kinks where singular values cross zero, which the
// bisection isolates.  abs_error_estimate is the sum of accepted panel
// estimates; converged is false if the panel budget ran out.
QuadratureResult l1_s1_norm(const TrigMatrixPoly& p, double tol);

// Scalar adaptive quadrature over [0,1], same scheme.  Exposed for oracle
// integrals such as int |1 + e^{2 pi i m t}| dt.
QuadratureResult integrate_adaptive(const std::function<double(double)>& fn, double tol,
                                    long long max_panels = 2'000'000);

// Upper estimate of sup_t ||f(t)||: grid sup plus local ternary refinement,
// plus the Bernstein-type margin 2*pi*max|k|*(sum_i ||C_i||_S1)*h for grid
// step h.  The margin keeps the estimate on the safe side for
// lem_bdd_check; it may dominate tol when max|k| is large.
double linf_norm(const TrigMatrixPoly& p, double tol);

struct TauMoments {
    CMat m1;  // (I (x) tau)(f^* f)   = sum_i C_i^* C_i
    CMat m2;  // (I (x) tau)((f^*f)^2) = sum over -k_i+k_j-k_k+k_l = 0 of C_i^* C_j C_k^* C_l
};

// Exact integer-indexed sums, no quadrature.  Direct four-fold loop for
// d <= 40, frequency-difference bucketing beyond.
TauMoments tau_moments(const TrigMatrixPoly& p);

// (I (x) tau)((f^*f)^2) <= alpha (I (x) tau)(f^*f) in the PSD order, after
// rescaling the tuple to sinfty_rc_norm = 1.
bool moment_inequality_check(const TrigMatrixPoly& p, double alpha, double tol);

// ||sum C_i^* C_i|| <= ||f||_inf^2 + tol
bool lem_bdd_check(const TrigMatrixPoly& p, double tol);

struct RatioReport {
    QuadratureResult l1;
    NormBracket s1rc;
    double ratio_lower = 0.0;  // (l1 - err) / upper
    double ratio_upper = 0.0;  // (l1 + err) / lower
    bool violates = false;     // whole interval below 1/sqrt(2)
};

RatioReport khintchine_ratio(const TrigMatrixPoly& p, double tol, const AscentOptions& opt = {});

inline constexpr double kOneOverSqrt2 = 0.7071067811865475244;

}  // namespace z2lab
