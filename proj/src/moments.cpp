#include "z2lab/moments.hpp"

#include <algorithm>
#include <cmath>

#include "z2lab/cmat.hpp"
#include "z2lab/errors.hpp"
#include "z2lab/parallel.hpp"
#include "z2lab/rng.hpp"

namespace z2lab {

namespace {

// Literal pairing sum.  `used` tracks consumed factors; pairs the first
// free factor with every admissible partner and recurses.
double matchings(const std::span<const Factor>& word, std::vector<bool>& used, GaussianKind kind) {
    std::size_t first = 0;
    while (first < word.size() && used[first]) ++first;
    if (first == word.size()) return 1.0;
    used[first] = true;
    double total = 0.0;
    for (std::size_t j = first + 1; j < word.size(); ++j) {
        if (used[j]) continue;
        if (word[j].index != word[first].index) continue;
        if (kind == GaussianKind::Complex && word[j].conjugated == word[first].conjugated) continue;
        used[j] = true;
        total += matchings(word, used, kind);
        used[j] = false;
    }
    used[first] = false;
    return total;
}

}  // namespace

std::complex<double> gaussian_moment(std::span<const Factor> word, GaussianKind kind) {
    if (word.size() % 2 != 0) return 0.0;
    std::vector<bool> used(word.size(), false);
    return matchings(word, used, kind);
}

MomentProfile finish_profile(MomentProfile p) {
    p.beta = p.N1 - p.N2 - p.Z21 + p.Z22 + p.Z23;
    p.eta = p.N1 - p.N2 + p.Z22 + p.Z23;
    p.alpha = std::max(p.N2 + p.Z21, p.N1 + p.Z22 + p.Z23);
    return p;
}

namespace {

double word4(int a, int b, int c, int d, GaussianKind kind) {
    // tau(x_a^* x_b x_c^* x_d) for i.i.d. Gaussians
    const Factor w[4] = {{a, true}, {b, false}, {c, true}, {d, false}};
    return gaussian_moment(std::span<const Factor>(w, 4), kind).real();
}

MomentProfile gaussian_profile_at(GaussianKind kind, int d) {
    MomentProfile p;
    p.N1 = 0.0;
    for (int x = 0; x < d; ++x) p.N1 = std::max(p.N1, word4(x, x, x, x, kind));
    p.N2 = HUGE_VAL;
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            if (x != y) p.N2 = std::min(p.N2, word4(x, x, y, y, kind));
    for (int w = 0; w < d; ++w)
        for (int x = 0; x < d; ++x) {
            if (w == x) continue;
            double s = 0.0;
            for (int y = 0; y < d; ++y)
                for (int z = 0; z < d; ++z) s += std::abs(word4(w, x, y, z, kind));
            p.Z21 = std::max(p.Z21, s);
        }
    for (int x = 0; x < d; ++x) {
        double s22 = 0.0;
        double s23 = 0.0;
        for (int y = 0; y < d; ++y) {
            for (int z = 0; z < d; ++z)
                if (y != z) s22 += std::abs(word4(x, x, y, z, kind));
            if (y != x) s23 += std::abs(word4(x, x, y, y, kind) - p.N2);
        }
        p.Z22 = std::max(p.Z22, s22);
        p.Z23 = std::max(p.Z23, s23);
    }
    return finish_profile(p);
}

MomentProfile gaussian_profile(GaussianKind kind, int d) {
    if (d < 2) throw InputError("profile: d must be >= 2");
    if (d > 32) throw Error("profile: exact summation capped at d = 32 (i.i.d. profiles stabilize at d = 2)");
    const MomentProfile p = gaussian_profile_at(kind, d);
    if (d > 2) {
        // i.i.d. truncations must not depend on d
        const MomentProfile q = gaussian_profile_at(kind, 2);
        if (p.N1 != q.N1 || p.N2 != q.N2 || p.Z21 != q.Z21 || p.Z22 != q.Z22 || p.Z23 != q.Z23)
            throw Error("profile: truncation failed to stabilize; moment summation is inconsistent");
    }
    return p;
}

}  // namespace

MomentProfile profile_complex_gaussian(int d) { return gaussian_profile(GaussianKind::Complex, d); }
MomentProfile profile_real_gaussian(int d) { return gaussian_profile(GaussianKind::Real, d); }

MomentProfile profile_group_characters(const IntegerSet& v) {
    if (v.size() < 2) throw InputError("profile: character system needs at least 2 elements");
    MomentProfile p;
    p.N1 = 1.0;
    p.N2 = 1.0;
    p.Z21 = static_cast<double>(z2_constant(v).z2);
    p.Z22 = 0.0;
    p.Z23 = 0.0;
    return finish_profile(p);
}

MomentProfile profile_group_characters(const LatticeSet& v) {
    if (v.size() < 2) throw InputError("profile: character system needs at least 2 elements");
    MomentProfile p;
    p.N1 = 1.0;
    p.N2 = 1.0;
    p.Z21 = static_cast<double>(z2_constant(v).z2);
    p.Z22 = 0.0;
    p.Z23 = 0.0;
    return finish_profile(p);
}

CrosscheckReport group_profile_crosscheck(const IntegerSet& v) {
    if (v.size() > 40) throw Error("group_profile_crosscheck: quadruple summation capped at 40 elements");
    CrosscheckReport rep;
    const auto& e = v.elements;
    // literal sup_{w != x} sum_{y,z} |tau(lambda_w^* lambda_x lambda_y^* lambda_z)|
    for (std::size_t w = 0; w < e.size(); ++w)
        for (std::size_t x = 0; x < e.size(); ++x) {
            if (w == x) continue;
            std::int64_t s = 0;
            for (std::size_t y = 0; y < e.size(); ++y)
                for (std::size_t z = 0; z < e.size(); ++z)
                    if (-e[w] + e[x] - e[y] + e[z] == 0) ++s;
            rep.z21_moment_sum = std::max(rep.z21_moment_sum, s);
        }
    rep.z2_constant = z2_constant(v).z2;
    rep.equal = rep.z21_moment_sum == rep.z2_constant;
    return rep;
}

double khintchine_constant(const MomentProfile& w, const MomentProfile& w_star) {
    const double a = std::max(w.alpha, w_star.alpha);
    if (a <= 0) throw InputError("khintchine_constant: alpha must be positive");
    return 1.0 / std::sqrt(a);
}

MonteCarloProfile monte_carlo_profile(GaussianKind kind, int d, std::int64_t samples,
                                      std::uint64_t seed) {
    if (d < 2 || d > 8) throw InputError("monte_carlo_profile: d must be in [2, 8]");
    if (samples < 10'000) throw InputError("monte_carlo_profile: need at least 1e4 samples");

    // statistics: |g_0|^4, |g_0|^2 |g_1|^2, then Re/Im of the d^2 quadruple
    // moments conj(g_0) g_1 conj(g_y) g_z
    const int nquad = d * d;
    const int nstats = 2 + 2 * nquad;
    const int shards = 64;

    std::vector<std::vector<double>> sum(shards, std::vector<double>(static_cast<std::size_t>(nstats), 0.0));
    std::vector<std::vector<double>> sumsq(shards, std::vector<double>(static_cast<std::size_t>(nstats), 0.0));

    parallel_for(static_cast<std::size_t>(shards), [&](std::size_t s) {
        const std::int64_t base = samples / shards;
        const std::int64_t count = base + (static_cast<std::int64_t>(s) < samples % shards ? 1 : 0);
        Rng rng(derive_seed(seed, s));
        std::vector<cd> g(static_cast<std::size_t>(d));
        auto& acc = sum[s];
        auto& acc2 = sumsq[s];
        for (std::int64_t it = 0; it < count; ++it) {
            for (auto& v : g)
                v = (kind == GaussianKind::Complex) ? rng.complex_normal() : cd{rng.normal(), 0.0};
            double vals[2];
            vals[0] = std::norm(g[0]) * std::norm(g[0]);
            vals[1] = std::norm(g[0]) * std::norm(g[1]);
            for (int k = 0; k < 2; ++k) {
                acc[static_cast<std::size_t>(k)] += vals[k];
                acc2[static_cast<std::size_t>(k)] += vals[k] * vals[k];
            }
            const cd head = std::conj(g[0]) * g[1];
            for (int y = 0; y < d; ++y)
                for (int z = 0; z < d; ++z) {
                    const cd q = head * std::conj(g[static_cast<std::size_t>(y)]) * g[static_cast<std::size_t>(z)];
                    const int k = 2 + 2 * (y * d + z);
                    acc[static_cast<std::size_t>(k)] += q.real();
                    acc2[static_cast<std::size_t>(k)] += q.real() * q.real();
                    acc[static_cast<std::size_t>(k + 1)] += q.imag();
                    acc2[static_cast<std::size_t>(k + 1)] += q.imag() * q.imag();
                }
        }
    });

    std::vector<double> mean(static_cast<std::size_t>(nstats), 0.0);
    std::vector<double> se(static_cast<std::size_t>(nstats), 0.0);
    for (int k = 0; k < nstats; ++k) {
        double s1 = 0.0, s2 = 0.0;
        for (int s = 0; s < shards; ++s) {
            s1 += sum[static_cast<std::size_t>(s)][static_cast<std::size_t>(k)];
            s2 += sumsq[static_cast<std::size_t>(s)][static_cast<std::size_t>(k)];
        }
        const double n = static_cast<double>(samples);
        mean[static_cast<std::size_t>(k)] = s1 / n;
        const double var = std::max(0.0, (s2 - s1 * s1 / n) / (n - 1.0));
        se[static_cast<std::size_t>(k)] = std::sqrt(var / n);
    }

    MonteCarloProfile out;
    out.samples = samples;
    out.n1 = mean[0];
    out.n1_se = se[0];
    out.n2 = mean[1];
    out.n2_se = se[1];

    auto sigma_dev = [](double exact, double est, double s) {
        return s > 0 ? std::abs(exact - est) / s : (exact == est ? 0.0 : HUGE_VAL);
    };
    const double exact_n1 = word4(0, 0, 0, 0, kind);
    const double exact_n2 = word4(0, 0, 1, 1, kind);
    out.max_sigma_dev = std::max(sigma_dev(exact_n1, out.n1, out.n1_se),
                                 sigma_dev(exact_n2, out.n2, out.n2_se));

    double z21 = 0.0, z21_var = 0.0;
    for (int y = 0; y < d; ++y)
        for (int z = 0; z < d; ++z) {
            const int k = 2 + 2 * (y * d + z);
            const cd m{mean[static_cast<std::size_t>(k)], mean[static_cast<std::size_t>(k + 1)]};
            z21 += std::abs(m);
            z21_var += se[static_cast<std::size_t>(k)] * se[static_cast<std::size_t>(k)] +
                       se[static_cast<std::size_t>(k + 1)] * se[static_cast<std::size_t>(k + 1)];
            const double exact = word4(0, 1, y, z, kind);
            out.max_sigma_dev = std::max(out.max_sigma_dev,
                                         sigma_dev(exact, mean[static_cast<std::size_t>(k)],
                                                   se[static_cast<std::size_t>(k)]));
        }
    out.z21 = z21;
    out.z21_se = std::sqrt(z21_var);
    out.flagged = out.max_sigma_dev > 4.0;
    return out;
}

}  // namespace z2lab
