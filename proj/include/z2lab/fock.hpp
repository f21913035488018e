#pragma once

#include <cstdint>
#include <vector>

#include "z2lab/cmat.hpp"

namespace z2lab {

std::int64_t binomial(int n, int k);

// Basis bookkeeping for the wedge construction: all (n+1)-element subsets
// of {1..2n+1} (domain) paired index-by-index with n-element subsets
// (codomain).  Subsets are bitmasks; bit i-1 stands for element i.
struct SubsetBasis {
    int n = 0;
    std::vector<std::uint32_t> domain;    // (n+1)-subsets
    std::vector<std::uint32_t> codomain;  // n-subsets, same length
};

SubsetBasis colex_basis(int n);       // colex order on both sectors
SubsetBasis complement_basis(int n);  // lex order, codomain = complements

// Family of 2n+1 partial isometries a_1..a_{2n+1} acting between the
// (n+1)- and n-particle sectors of the antisymmetric Fock space over
// C^{2n+1}, extracted as d x d matrices with d = binomial(2n+1, n+1).
//
// wedge_backed marks families produced by the wedge construction here;
// only those support the exact CAR check (which runs on the full
// 2^{2n+1}-dimensional Fock space, where the relations actually live).
struct IsometryFamily {
    int n = 0;
    int d = 0;
    std::vector<CMat> ops;
    bool wedge_backed = false;
};

inline constexpr int kDefaultDimensionCap = 3432;

// a_k(e_S) = (-1)^{#{j in S : j < k}} e_{S \ {k}} on the colex basis.
IsometryFamily build_family(int n, int dim_cap = kDefaultDimensionCap);

// The explicit five 10x10 signed 0/1 matrices for n = 2.  Same wedge
// construction in a different basis gauge: lex order on 3-subsets with the
// codomain basis listed as complements.  Entrywise this reproduces the
// published a_1..a_5 exactly (frozen in tests).
IsometryFamily fixture_n2();

struct FamilyReport {
    int n = 0;
    int d = 0;
    std::int64_t expected_trace = 0;  // binomial(2n, n)
    double trace_dev = 0.0;           // max_i |Tr(a_i^* a_i) - binomial(2n,n)|
    double trace_orth_dev = 0.0;      // max_{i != j} |Tr(a_i^* a_j)|
    double sum_col_dev = 0.0;         // ||sum a_i^* a_i - (n+1) I||_F
    double sum_row_dev = 0.0;         // ||sum a_i a_i^* - (n+1) I||_F
    double partial_isometry_dev = 0.0;  // max over trials ||(b^*b)^2 - b^*b||_F
    double trace_b_dev = 0.0;           // max over trials |Tr(b^*b) - binomial(2n,n)|
    int trials = 0;
    bool car_checked = false;
    double car_anti_dev = 0.0;   // max_{i,j} ||{a_i, a_j}||_F on the full Fock space
    double car_mixed_dev = 0.0;  // max_{i,j} ||{a_i, a_j^*} - delta_ij I||_F
    bool passed = false;
};

// Checks properties 1)-3) plus trace orthogonality on `trials` seeded
// random complex unit coefficient vectors.  Exact integer checks are
// compared against tol directly; the floating random-trial checks against
// max(tol, 1e-12) since unit vectors are floating-point.
FamilyReport verify_family(const IsometryFamily& fam, double tol, int trials, std::uint64_t seed);

}  // namespace z2lab
