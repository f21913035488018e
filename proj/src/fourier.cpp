#include "z2lab/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>

#include "z2lab/eig.hpp"
#include "z2lab/errors.hpp"

namespace z2lab {

void TrigMatrixPoly::validate() const {
    tuple.validate();
    if (!tuple.frequencies) throw InputError("TrigMatrixPoly: frequencies are required");
    if (tuple.count() == 0) throw InputError("TrigMatrixPoly: empty polynomial");
}

CMat eval_poly(const TrigMatrixPoly& p, double t) {
    const int n = p.tuple.dim();
    CMat f = CMat::zero(n, n);
    for (int i = 0; i < p.tuple.count(); ++i) {
        const double a = 2.0 * std::numbers::pi * static_cast<double>(p.freqs()[static_cast<std::size_t>(i)]) * t;
        const cd phase{std::cos(a), std::sin(a)};
        const CMat& c = p.tuple.mats[static_cast<std::size_t>(i)];
        for (std::size_t k = 0; k < f.a.size(); ++k) f.a[k] += phase * c.a[k];
    }
    return f;
}

namespace {

// Gauss-Legendre nodes/weights on [-1,1] via Newton on P_n.
struct GaussRule {
    std::vector<double> x;
    std::vector<double> w;
};

GaussRule gauss_rule(int n) {
    GaussRule r;
    r.x.resize(static_cast<std::size_t>(n));
    r.w.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        r.x[static_cast<std::size_t>(i)] = x;
        r.w[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

const GaussRule& rule15() {
    static const GaussRule r = gauss_rule(15);
    return r;
}
const GaussRule& rule7() {
    static const GaussRule r = gauss_rule(7);
    return r;
}

double apply_rule(const GaussRule& r, const std::function<double(double)>& fn, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double s = 0.0;
    for (std::size_t i = 0; i < r.x.size(); ++i) s += r.w[i] * fn(mid + half * r.x[i]);
    return s * half;
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& fn, double tol,
                                    long long max_panels) {
    if (tol <= 0) throw InputError("integrate_adaptive: tol must be > 0");
    QuadratureResult out;
    struct Panel {
        double a, b;
    };
    bool budget_exhausted = false;
    std::vector<Panel> stack{{0.0, 1.0}};
    while (!stack.empty()) {
        const Panel p = stack.back();
        stack.pop_back();
        const double len = p.b - p.a;
        const double i15 = apply_rule(rule15(), fn, p.a, p.b);
        const double i7 = apply_rule(rule7(), fn, p.a, p.b);
        const double est = std::abs(i15 - i7);
        const bool budget_left = out.panels + static_cast<long long>(stack.size()) < max_panels;
        if (est <= 0.25 * tol * len || len <= 1e-13 || !budget_left) {
            out.value += i15;
            out.abs_error_estimate += est;
            ++out.panels;
            if (!budget_left && est > 0.25 * tol * len && len > 1e-13) budget_exhausted = true;
        } else {
            const double mid = 0.5 * (p.a + p.b);
            stack.push_back({mid, p.b});  // left half processed first
            stack.push_back({p.a, mid});
        }
    }
    out.converged = !budget_exhausted && out.abs_error_estimate <= tol;
    return out;
}

QuadratureResult l1_s1_norm(const TrigMatrixPoly& p, double tol) {
    p.validate();
    auto integrand = [&](double t) { return trace_norm(eval_poly(p, t)); };
    return integrate_adaptive(integrand, tol);
}

double linf_norm(const TrigMatrixPoly& p, double tol) {
    if (tol <= 0) throw InputError("linf_norm: tol must be > 0");
    p.validate();
    std::int64_t kmax = 0;
    for (std::int64_t k : p.freqs()) kmax = std::max(kmax, std::abs(k));
    double coeff_mass = 0.0;
    for (const CMat& c : p.tuple.mats) coeff_mass += trace_norm(c);
    const double lipschitz = 2.0 * std::numbers::pi * static_cast<double>(kmax) * coeff_mass;

    auto value = [&](double t) { return op_norm(eval_poly(p, t)); };

    // ternary refinement around a bracketing interval
    auto refine = [&](double lo, double hi) {
        for (int it = 0; it < 80; ++it) {
            const double m1 = lo + (hi - lo) / 3.0;
            const double m2 = hi - (hi - lo) / 3.0;
            if (value(m1) < value(m2))
                lo = m1;
            else
                hi = m2;
        }
        return value(0.5 * (lo + hi));
    };

    long long n = 64 * std::max<std::int64_t>(1, kmax);
    double prev = -1.0;
    for (;;) {
        const double h = 1.0 / static_cast<double>(n);
        double best = 0.0;
        long long best_j = 0;
        for (long long j = 0; j < n; ++j) {
            const double v = value(static_cast<double>(j) * h);
            if (v > best) {
                best = v;
                best_j = j;
            }
        }
        const double refined = std::max(best, refine((best_j - 1) * h, (best_j + 1) * h));
        const double margin = lipschitz * h;
        const double estimate = refined + margin;
        if ((prev >= 0.0 && std::abs(estimate - prev) <= tol && margin <= tol) || n >= (1LL << 22))
            return estimate;
        prev = estimate;
        n *= 2;
    }
}

namespace {

CMat tau_m2_direct(const TrigMatrixPoly& p) {
    const int d = p.tuple.count();
    const int n = p.tuple.dim();
    const auto& k = p.freqs();
    const auto& c = p.tuple.mats;
    CMat m2 = CMat::zero(n, n);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const CMat left = c[static_cast<std::size_t>(i)].adjoint() * c[static_cast<std::size_t>(j)];
            for (int kk = 0; kk < d; ++kk)
                for (int l = 0; l < d; ++l) {
                    if (-k[static_cast<std::size_t>(i)] + k[static_cast<std::size_t>(j)] -
                            k[static_cast<std::size_t>(kk)] + k[static_cast<std::size_t>(l)] !=
                        0)
                        continue;
                    m2 += left * (c[static_cast<std::size_t>(kk)].adjoint() * c[static_cast<std::size_t>(l)]);
                }
        }
    return m2;
}

// Pairs bucketed by frequency difference u = k_j - k_i:
//   P(u) = sum_{k_j - k_i = u} C_i^* C_j,   m2 = sum_u P(u) P(-u),
// and P(-u) = P(u)^*, so each bucket contributes P(u) P(u)^*.
CMat tau_m2_bucketed(const TrigMatrixPoly& p) {
    const int d = p.tuple.count();
    const int n = p.tuple.dim();
    const auto& k = p.freqs();
    const auto& c = p.tuple.mats;
    std::map<std::int64_t, CMat> buckets;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const std::int64_t u = k[static_cast<std::size_t>(j)] - k[static_cast<std::size_t>(i)];
            auto [it, fresh] = buckets.try_emplace(u, CMat::zero(n, n));
            it->second += c[static_cast<std::size_t>(i)].adjoint() * c[static_cast<std::size_t>(j)];
        }
    CMat m2 = CMat::zero(n, n);
    for (const auto& [u, pu] : buckets) {
        const auto neg = buckets.find(-u);
        if (neg == buckets.end()) continue;
        m2 += pu * neg->second;
    }
    return m2;
}

}  // namespace

TauMoments tau_moments(const TrigMatrixPoly& p) {
    p.validate();
    TauMoments tm;
    tm.m1 = column_gram(p.tuple);
    tm.m2 = p.tuple.count() <= 40 ? tau_m2_direct(p) : tau_m2_bucketed(p);
    return tm;
}

bool moment_inequality_check(const TrigMatrixPoly& p, double alpha, double tol) {
    p.validate();
    const double s = sinfty_rc_norm(p.tuple);
    if (s == 0.0) return true;
    TrigMatrixPoly q = p;
    for (CMat& c : q.tuple.mats) c *= 1.0 / s;
    const TauMoments tm = tau_moments(q);
    return psd_leq(tm.m2, static_cast<cd>(alpha) * tm.m1, tol);
}

bool lem_bdd_check(const TrigMatrixPoly& p, double tol) {
    p.validate();
    const double lhs = op_norm(column_gram(p.tuple));
    const double sup = linf_norm(p, std::max(tol, 1e-6));
    return lhs <= sup * sup + tol;
}

RatioReport khintchine_ratio(const TrigMatrixPoly& p, double tol, const AscentOptions& opt) {
    if (tol <= 0) throw InputError("khintchine_ratio: tol must be > 0");
    p.validate();
    RatioReport r;
    r.l1 = l1_s1_norm(p, tol);
    r.s1rc = s1_rc_norm(p.tuple, std::min(tol, 1e-8), opt);
    const double lo_num = std::max(r.l1.value - r.l1.abs_error_estimate, 0.0);
    const double hi_num = r.l1.value + r.l1.abs_error_estimate;
    r.ratio_lower = r.s1rc.upper > 0 ? lo_num / r.s1rc.upper : 0.0;
    r.ratio_upper = r.s1rc.lower > 0 ? hi_num / r.s1rc.lower : HUGE_VAL;
    r.violates = r.ratio_upper < kOneOverSqrt2;
    return r;
}

}  // namespace z2lab
