#pragma once

#include <optional>

#include "z2lab/fourier.hpp"
#include "z2lab/intset.hpp"

namespace z2lab {

// Coefficient family tied to a forbidden pattern:
//   FivePairs: A_{2i-1} = A_{2i} = B_i,  B_i from build_family(2) (10x10)
//   ThreeAPs : C_{3i-2} = C_{3i} = B_i, C_{3i-1} = 2 B_i, from build_family(1)
//   AP5      : scalars (1, 2, 3, 2, 1)
// Frequencies are the pattern elements in witness order.
TrigMatrixPoly build_witness(const PatternWitness& pattern);

struct ViolationReport {
    PatternWitness pattern;
    TrigMatrixPoly polynomial;
    RatioReport ratio;
};

struct AuditResult {
    Z2Result z2;
    // engaged iff z2 > 6; carries the witness polynomial and its ratio
    std::optional<ViolationReport> violation;
    bool consistent() const { return !violation.has_value(); }
};

// If Z2(V) <= 6 the set is consistent with the converse theorem.  Otherwise
// searches FivePairs, then ThreeAPs, then AP5 (strongest ratio first),
// builds the witness and evaluates its Khintchine ratio.  Z2 >= 7 with no
// pattern found throws TheoremContradictionError: the converse theorem's
// case analysis says this cannot happen, so it marks a search fault.
AuditResult converse_audit(const IntegerSet& v, double tol, const AscentOptions& opt = {});

enum class AbelianCase { Torus, Z2Products };

// Closed-form ratio data for the product-group constructions:
//   d = binomial(2m+1, m+1), A_m = d sqrt(2(m+1)),
//   torus:       B_m = 4 d (m+1) / (pi sqrt(2m+1)),  ratio -> 2/pi
//   Z/2 product: B_m =   d (m+1) / sqrt(2m+1),       ratio -> 1/2
// A_m and B_m overflow to inf for large m; `ratio` is evaluated in the
// cancelled form and stays finite for all m.
struct AbelianRatio {
    int m = 0;
    AbelianCase which = AbelianCase::Torus;
    double a_m = 0.0;
    double b_m = 0.0;
    double ratio = 0.0;
};

AbelianRatio abelian_ratio(int m, AbelianCase which);

double abelian_ratio_limit(AbelianCase which);  // 2/pi or 1/2

// Rebuilds the coefficient family C_{2i-1} = C_{2i} = B_i from
// build_family(m), evaluates A_m as an rc-norm bracket (must close at the
// closed form) and, in the torus case, B_m by L1 quadrature on frequencies
// realizing the paired pattern.  m <= 3.
struct AbelianCheck {
    AbelianRatio expected;
    NormBracket a_bracket;
    std::optional<QuadratureResult> b_quadrature;  // torus case only
    double a_dev = 0.0;
    double b_dev = 0.0;
    bool passed = false;
};

AbelianCheck abelian_ratio_numeric_check(int m, AbelianCase which, double tol);

}  // namespace z2lab
