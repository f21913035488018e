#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "z2lab/intset.hpp"

namespace z2lab {

enum class GaussianKind { Complex, Real };

// One factor of a Gaussian word: gamma_{index} or its conjugate.
struct Factor {
    int index = 0;
    bool conjugated = false;
};

// Exact Wick/Isserlis moment of a word in i.i.d. standard Gaussians:
// sum over perfect matchings of E[pair] products.  Complex variables pair
// only conjugate with unconjugated factors (E[gamma_i conj(gamma_j)] =
// delta_ij); real variables pair freely (E[g_i g_j] = delta_ij, conjugation
// flags are ignored).  Odd words give 0.
std::complex<double> gaussian_moment(std::span<const Factor> word, GaussianKind kind);

// Moment profile of an orthonormal system (Theorem-level constants).
struct MomentProfile {
    double N1 = 0.0;   // sup_x tau(|x|^4)
    double N2 = 0.0;   // inf_{x != y} tau(|x|^2 |y|^2)
    double Z21 = 0.0;  // sup_{w != x} sum_{y,z} |tau(w^* x y^* z)|
    double Z22 = 0.0;  // sup_x sum_{y != z} |tau(|x|^2 y^* z)|
    double Z23 = 0.0;  // sup_x sum_{y != x} |tau(|x|^2 |y|^2) - N2|
    double beta = 0.0;    // N1 - N2 - Z21 + Z22 + Z23
    double eta = 0.0;     // N1 - N2 + Z22 + Z23
    double alpha = 0.0;   // max(N2 + Z21, N1 + Z22 + Z23)
};

MomentProfile finish_profile(MomentProfile p);  // fills beta/eta/alpha

// Exact profiles by moment summation over the size-d truncation (d >= 2).
// For the i.i.d. Gaussian kinds the sups/infs stabilize at d = 2, which is
// asserted internally.
MomentProfile profile_complex_gaussian(int d);
MomentProfile profile_real_gaussian(int d);

// Character system {lambda_k : k in V} of the integer group:
// tau(w^* x y^* z) = [ -w + x - y + z = 0 ].
MomentProfile profile_group_characters(const IntegerSet& v);
MomentProfile profile_group_characters(const LatticeSet& v);

// Z_{2,1} of the character system by the literal quadruple moment sum,
// compared against the difference-histogram Z2 constant.
struct CrosscheckReport {
    std::int64_t z21_moment_sum = 0;
    std::int64_t z2_constant = 0;
    bool equal = false;
};
CrosscheckReport group_profile_crosscheck(const IntegerSet& v);

// 1 / sqrt(max(alpha(W), alpha(W^*)))
double khintchine_constant(const MomentProfile& w, const MomentProfile& w_star);

// Monte Carlo cross-check of the exact Gaussian moments.  Estimates are
// sharded deterministically; flagged = some exact value fell outside
// +-4 standard errors of its estimate.
struct MonteCarloProfile {
    std::int64_t samples = 0;
    double n1 = 0.0, n1_se = 0.0;
    double n2 = 0.0, n2_se = 0.0;
    // sum_{y,z} |E[w^* x y^* z]| terms for (w,x) = (0,1), aggregated
    double z21 = 0.0, z21_se = 0.0;
    double max_sigma_dev = 0.0;  // worst |exact - estimate| / se over base moments
    bool flagged = false;
};
MonteCarloProfile monte_carlo_profile(GaussianKind kind, int d, std::int64_t samples,
                                      std::uint64_t seed);

}  // namespace z2lab
