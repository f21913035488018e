#include "z2lab/witness.hpp"

#include <cmath>
#include <numbers>

#include "z2lab/errors.hpp"
#include "z2lab/fock.hpp"

namespace z2lab {

TrigMatrixPoly build_witness(const PatternWitness& pattern) {
    if (!pattern_valid(pattern)) throw InputError("build_witness: malformed pattern witness");
    TrigMatrixPoly p;
    switch (pattern.kind) {
        case PatternKind::FivePairs: {
            const IsometryFamily fam = build_family(2);
            for (int i = 0; i < 5; ++i) {
                p.tuple.mats.push_back(fam.ops[static_cast<std::size_t>(i)]);
                p.tuple.mats.push_back(fam.ops[static_cast<std::size_t>(i)]);
            }
            break;
        }
        case PatternKind::ThreeAPs: {
            const IsometryFamily fam = build_family(1);
            for (int i = 0; i < 3; ++i) {
                p.tuple.mats.push_back(fam.ops[static_cast<std::size_t>(i)]);
                p.tuple.mats.push_back(2.0 * fam.ops[static_cast<std::size_t>(i)]);
                p.tuple.mats.push_back(fam.ops[static_cast<std::size_t>(i)]);
            }
            break;
        }
        case PatternKind::AP5: {
            const double coeff[5] = {1.0, 2.0, 3.0, 2.0, 1.0};
            for (double c : coeff) {
                CMat m(1, 1);
                m(0, 0) = c;
                p.tuple.mats.push_back(m);
            }
            break;
        }
    }
    p.tuple.frequencies = pattern.elements;
    p.validate();
    return p;
}

AuditResult converse_audit(const IntegerSet& v, double tol, const AscentOptions& opt) {
    if (tol <= 0) throw InputError("converse_audit: tol must be > 0");
    AuditResult out;
    out.z2 = z2_constant(v);
    if (out.z2.z2 <= 6) return out;

    std::optional<PatternWitness> w = find_pattern(v, PatternKind::FivePairs);
    if (!w) w = find_pattern(v, PatternKind::ThreeAPs);
    if (!w) w = find_pattern(v, PatternKind::AP5);
    if (!w)
        throw TheoremContradictionError(
            "converse_audit: Z2 = " + std::to_string(out.z2.z2) +
            " >= 7 but no forbidden pattern was found; this contradicts the converse "
            "theorem's case analysis and indicates a pattern-search fault");

    ViolationReport rep;
    rep.pattern = *w;
    rep.polynomial = build_witness(*w);
    rep.ratio = khintchine_ratio(rep.polynomial, tol, opt);
    out.violation = std::move(rep);
    return out;
}

double abelian_ratio_limit(AbelianCase which) {
    return which == AbelianCase::Torus ? 2.0 / std::numbers::pi : 0.5;
}

AbelianRatio abelian_ratio(int m, AbelianCase which) {
    if (m < 1) throw InputError("abelian_ratio: m must be >= 1");
    AbelianRatio r;
    r.m = m;
    r.which = which;
    // d overflows for large m; ratio below is the cancelled form
    double d = HUGE_VAL;
    if (2 * m + 1 <= 62) d = static_cast<double>(binomial(2 * m + 1, m + 1));
    const double mp1 = static_cast<double>(m) + 1.0;
    const double l = 2.0 * m + 1.0;
    r.a_m = d * std::sqrt(2.0 * mp1);
    if (which == AbelianCase::Torus) {
        r.b_m = 4.0 * d * mp1 / (std::numbers::pi * std::sqrt(l));
        r.ratio = std::sqrt(8.0 * mp1) / (std::numbers::pi * std::sqrt(l));
    } else {
        r.b_m = d * mp1 / std::sqrt(l);
        r.ratio = std::sqrt(mp1 / (2.0 * l));
    }
    return r;
}

AbelianCheck abelian_ratio_numeric_check(int m, AbelianCase which, double tol) {
    if (m < 1 || m > 3) throw InputError("abelian_ratio_numeric_check: m must be in [1, 3]");
    if (tol <= 0) throw InputError("abelian_ratio_numeric_check: tol must be > 0");

    AbelianCheck chk;
    chk.expected = abelian_ratio(m, which);

    const IsometryFamily fam = build_family(m);
    MatrixTuple paired;
    for (const CMat& b : fam.ops) {
        paired.mats.push_back(b);
        paired.mats.push_back(b);
    }
    chk.a_bracket = s1_rc_norm(paired, std::min(tol, 1e-8));
    chk.a_dev = std::max(std::abs(chk.a_bracket.lower - chk.expected.a_m),
                         std::abs(chk.a_bracket.upper - chk.expected.a_m));
    bool ok = chk.a_bracket.converged && chk.a_dev <= tol * chk.expected.a_m;

    if (which == AbelianCase::Torus) {
        // paired frequencies (10k, 10k+1): all distinct, common difference 1
        TrigMatrixPoly poly;
        poly.tuple = paired;
        std::vector<std::int64_t> freqs;
        for (int k = 0; k < 2 * m + 1; ++k) {
            freqs.push_back(10 * (k + 1));
            freqs.push_back(10 * (k + 1) + 1);
        }
        poly.tuple.frequencies = std::move(freqs);
        chk.b_quadrature = l1_s1_norm(poly, std::min(tol, 1e-7));
        chk.b_dev = std::abs(chk.b_quadrature->value - chk.expected.b_m);
        ok = ok && chk.b_quadrature->converged && chk.b_dev <= tol * chk.expected.b_m;
    }
    chk.passed = ok;
    return chk;
}

}  // namespace z2lab
