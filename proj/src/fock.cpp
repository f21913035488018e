#include "z2lab/fock.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "z2lab/errors.hpp"
#include "z2lab/parallel.hpp"
#include "z2lab/rng.hpp"

namespace z2lab {

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        if (r > INT64_MAX / (n - k + i)) throw OverflowError("binomial: 64-bit overflow");
        r = r * (n - k + i) / i;
    }
    return r;
}

namespace {

std::vector<std::uint32_t> subsets_of_size(int m, int k) {
    std::vector<std::uint32_t> out;
    const std::uint32_t full = (m >= 32) ? 0xffffffffu : ((1u << m) - 1u);
    for (std::uint32_t s = 0; s <= full; ++s)
        if (std::popcount(s) == k) out.push_back(s);
    return out;  // numeric order on masks == colex order on subsets
}

std::vector<int> mask_elements(std::uint32_t s) {
    std::vector<int> e;
    for (int i = 0; i < 32; ++i)
        if (s & (1u << i)) e.push_back(i + 1);
    return e;
}

// sign of removing element k from S: (-1)^{#{j in S : j < k}}
int removal_sign(std::uint32_t s, int k) {
    const std::uint32_t below = s & ((1u << (k - 1)) - 1u);
    return (std::popcount(below) % 2 == 0) ? 1 : -1;
}

IsometryFamily family_from_basis(const SubsetBasis& basis) {
    const int m = 2 * basis.n + 1;
    const int d = static_cast<int>(basis.domain.size());
    std::vector<int> cod_index(1u << m, -1);
    for (int i = 0; i < d; ++i) cod_index[basis.codomain[static_cast<std::size_t>(i)]] = i;

    IsometryFamily fam;
    fam.n = basis.n;
    fam.d = d;
    fam.wedge_backed = true;
    fam.ops.reserve(static_cast<std::size_t>(m));
    for (int k = 1; k <= m; ++k) {
        CMat a(d, d);
        for (int col = 0; col < d; ++col) {
            const std::uint32_t s = basis.domain[static_cast<std::size_t>(col)];
            if (!(s & (1u << (k - 1)))) continue;
            const int row = cod_index[s & ~(1u << (k - 1))];
            a(row, col) = static_cast<double>(removal_sign(s, k));
        }
        fam.ops.push_back(std::move(a));
    }
    return fam;
}

}  // namespace

SubsetBasis colex_basis(int n) {
    SubsetBasis b;
    b.n = n;
    b.domain = subsets_of_size(2 * n + 1, n + 1);
    b.codomain = subsets_of_size(2 * n + 1, n);
    return b;
}

SubsetBasis complement_basis(int n) {
    const int m = 2 * n + 1;
    SubsetBasis b;
    b.n = n;
    b.domain = subsets_of_size(m, n + 1);
    // lex order on the element lists
    std::sort(b.domain.begin(), b.domain.end(), [](std::uint32_t x, std::uint32_t y) {
        return mask_elements(x) < mask_elements(y);
    });
    const std::uint32_t full = (1u << m) - 1u;
    b.codomain.reserve(b.domain.size());
    for (std::uint32_t s : b.domain) b.codomain.push_back(full & ~s);
    return b;
}

IsometryFamily build_family(int n, int dim_cap) {
    if (n < 1) throw InputError("build_family: n must be >= 1");
    const std::int64_t d = binomial(2 * n + 1, n + 1);
    if (d > dim_cap) throw DimensionCapError("build_family: dimension " + std::to_string(d) +
                                             " exceeds cap " + std::to_string(dim_cap));
    return family_from_basis(colex_basis(n));
}

IsometryFamily fixture_n2() { return family_from_basis(complement_basis(2)); }

namespace {

// Exact CAR residuals for the wedge annihilators on the full Fock space
// F(C^m), m = 2n+1.  All coefficients are integers, so the residuals are
// exact: {a_i, a_j} = 0 and {a_i, a_j^*} = delta_ij on every basis vector.
struct CarResiduals {
    double anti = 0.0;
    double mixed = 0.0;
};

CarResiduals car_residuals_full_space(int n) {
    const int m = 2 * n + 1;
    const std::uint32_t nstates = 1u << m;
    // coefficient of a_k e_S (annihilation) / a_k^* e_S (creation)
    auto ann = [](std::uint32_t s, int k) -> std::pair<std::uint32_t, int> {
        const std::uint32_t bit = 1u << (k - 1);
        if (!(s & bit)) return {0, 0};
        return {s & ~bit, removal_sign(s, k)};
    };
    auto cre = [](std::uint32_t s, int k) -> std::pair<std::uint32_t, int> {
        const std::uint32_t bit = 1u << (k - 1);
        if (s & bit) return {0, 0};
        return {s | bit, removal_sign(s | bit, k)};
    };

    std::int64_t anti_sq = 0;
    std::int64_t mixed_sq = 0;
    std::vector<int> acc(nstates, 0);
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= m; ++j) {
            for (std::uint32_t s = 0; s < nstates; ++s) {
                // {a_i, a_j} e_S
                {
                    int c = 0;
                    if (auto [t, sg] = ann(s, j); sg != 0)
                        if (auto [u, sg2] = ann(t, i); sg2 != 0) c += sg * sg2;
                    if (auto [t, sg] = ann(s, i); sg != 0)
                        if (auto [u, sg2] = ann(t, j); sg2 != 0) c += sg * sg2;
                    anti_sq += static_cast<std::int64_t>(c) * c;
                }
                // ({a_i, a_j^*} - delta_ij) e_S; both terms land back on
                // masks of the same popcount, and in fact on single masks
                {
                    std::fill(acc.begin(), acc.end(), 0);
                    if (auto [t, sg] = cre(s, j); sg != 0)
                        if (auto [u, sg2] = ann(t, i); sg2 != 0) acc[u] += sg * sg2;
                    if (auto [t, sg] = ann(s, i); sg != 0)
                        if (auto [u, sg2] = cre(t, j); sg2 != 0) acc[u] += sg * sg2;
                    if (i == j) acc[s] -= 1;
                    for (std::uint32_t u = 0; u < nstates; ++u)
                        if (acc[u] != 0) mixed_sq += static_cast<std::int64_t>(acc[u]) * acc[u];
                }
            }
        }
    }
    CarResiduals r;
    r.anti = std::sqrt(static_cast<double>(anti_sq));
    r.mixed = std::sqrt(static_cast<double>(mixed_sq));
    return r;
}

}  // namespace

FamilyReport verify_family(const IsometryFamily& fam, double tol, int trials, std::uint64_t seed) {
    if (tol < 0) throw InputError("verify_family: tol must be >= 0");
    const int m = static_cast<int>(fam.ops.size());
    if (m != 2 * fam.n + 1) throw InputError("verify_family: expected 2n+1 operators");

    FamilyReport rep;
    rep.n = fam.n;
    rep.d = fam.d;
    rep.trials = trials;
    rep.expected_trace = binomial(2 * fam.n, fam.n);

    const CMat target = static_cast<cd>(fam.n + 1) * CMat::identity(fam.d);
    CMat sum_col = CMat::zero(fam.d, fam.d);
    CMat sum_row = CMat::zero(fam.d, fam.d);
    for (int i = 0; i < m; ++i) {
        const CMat gi = gram(fam.ops[static_cast<std::size_t>(i)]);
        sum_col += gi;
        sum_row += cogram(fam.ops[static_cast<std::size_t>(i)]);
        rep.trace_dev = std::max(rep.trace_dev, std::abs(gi.trace() - static_cast<cd>(rep.expected_trace)));
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            const cd t = (fam.ops[static_cast<std::size_t>(i)].adjoint() * fam.ops[static_cast<std::size_t>(j)]).trace();
            rep.trace_orth_dev = std::max(rep.trace_orth_dev, std::abs(t));
        }
    }
    rep.sum_col_dev = frobenius_distance(sum_col, target);
    rep.sum_row_dev = frobenius_distance(sum_row, target);

    std::vector<double> pi_dev(static_cast<std::size_t>(std::max(trials, 0)), 0.0);
    std::vector<double> tr_dev(static_cast<std::size_t>(std::max(trials, 0)), 0.0);
    parallel_for(static_cast<std::size_t>(std::max(trials, 0)), [&](std::size_t t) {
        Rng rng(derive_seed(seed, t));
        std::vector<cd> g(static_cast<std::size_t>(m));
        double norm2 = 0.0;
        for (auto& v : g) {
            v = rng.complex_normal();
            norm2 += std::norm(v);
        }
        const double inv = 1.0 / std::sqrt(norm2);
        CMat b = CMat::zero(fam.d, fam.d);
        for (int i = 0; i < m; ++i) b += (g[static_cast<std::size_t>(i)] * inv) * fam.ops[static_cast<std::size_t>(i)];
        const CMat bb = gram(b);
        pi_dev[t] = frobenius_distance(bb * bb, bb);
        tr_dev[t] = std::abs(bb.trace() - static_cast<cd>(rep.expected_trace));
    });
    for (double v : pi_dev) rep.partial_isometry_dev = std::max(rep.partial_isometry_dev, v);
    for (double v : tr_dev) rep.trace_b_dev = std::max(rep.trace_b_dev, v);

    if (fam.wedge_backed) {
        const CarResiduals car = car_residuals_full_space(fam.n);
        rep.car_checked = true;
        rep.car_anti_dev = car.anti;
        rep.car_mixed_dev = car.mixed;
    }

    const double float_tol = std::max(tol, 1e-12);
    rep.passed = rep.trace_dev <= tol && rep.trace_orth_dev <= tol && rep.sum_col_dev <= tol &&
                 rep.sum_row_dev <= tol && rep.partial_isometry_dev <= float_tol &&
                 rep.trace_b_dev <= float_tol &&
                 (!rep.car_checked || (rep.car_anti_dev <= tol && rep.car_mixed_dev <= tol));
    return rep;
}

}  // namespace z2lab
