#include <doctest.h>

#include <cmath>

#include "z2lab/moments.hpp"
#include "z2lab/rng.hpp"

using namespace z2lab;

namespace {

std::complex<double> moment(std::initializer_list<Factor> word, GaussianKind kind) {
    const std::vector<Factor> w(word);
    return gaussian_moment(std::span<const Factor>(w.data(), w.size()), kind);
}

// |gamma_i|^{2m} word: m unconjugated, m conjugated factors of index i
std::vector<Factor> abs_power_word(int index, int m) {
    std::vector<Factor> w;
    for (int j = 0; j < m; ++j) {
        w.push_back({index, true});
        w.push_back({index, false});
    }
    return w;
}

double dfact(int n) {  // (n)!! for odd n
    double r = 1.0;
    for (int k = n; k >= 1; k -= 2) r *= k;
    return r;
}

IntegerSet random_set(Rng& rng, int size, std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> v;
    while (IntegerSet::of(v).size() < size) v.push_back(rng.uniform_int(lo, hi));
    return IntegerSet::of(std::move(v));
}

}  // namespace

TEST_SUITE("moments") {
    TEST_CASE("fixed Wick values") {
        CHECK(moment({{0, true}, {0, false}}, GaussianKind::Complex).real() == 1.0);
        CHECK(moment({{0, true}, {1, false}}, GaussianKind::Complex).real() == 0.0);
        CHECK(moment({{0, true}, {0, false}, {0, true}, {0, false}}, GaussianKind::Complex).real() == 2.0);
        CHECK(moment({{0, false}, {0, false}, {0, false}, {0, false}}, GaussianKind::Real).real() == 3.0);
        CHECK(moment({{0, true}, {0, false}, {1, true}, {1, false}}, GaussianKind::Complex).real() == 1.0);
        // odd degree
        CHECK(moment({{0, false}, {0, false}, {0, false}}, GaussianKind::Real).real() == 0.0);
        // complex words with unmatched conjugation degree vanish
        CHECK(moment({{0, false}, {0, false}, {0, true}, {1, true}}, GaussianKind::Complex).real() == 0.0);
    }

    TEST_CASE("moment growth: m! and (2m-1)!!") {
        for (int m = 1; m <= 4; ++m) {
            const auto w = abs_power_word(0, m);
            double mfact = 1.0;
            for (int j = 2; j <= m; ++j) mfact *= j;
            CHECK(gaussian_moment(std::span<const Factor>(w.data(), w.size()), GaussianKind::Complex).real() ==
                  mfact);
            CHECK(gaussian_moment(std::span<const Factor>(w.data(), w.size()), GaussianKind::Real).real() ==
                  dfact(2 * m - 1));
        }
    }

    TEST_CASE("complex Gaussian profile") {
        for (int d : {2, 3, 6}) {
            const MomentProfile p = profile_complex_gaussian(d);
            CHECK(p.N1 == 2.0);
            CHECK(p.N2 == 1.0);
            CHECK(p.Z21 == 1.0);
            CHECK(p.Z22 == 0.0);
            CHECK(p.Z23 == 0.0);
            CHECK(p.alpha == 2.0);
            CHECK(p.beta == 0.0);
            CHECK(p.eta == 1.0);
        }
    }

    TEST_CASE("real Gaussian profile") {
        const MomentProfile p = profile_real_gaussian(4);
        CHECK(p.N1 == 3.0);
        CHECK(p.N2 == 1.0);
        // the exact quadruple sum gives 2 here (pairs (y,z) = (w,x) and (x,w));
        // alpha is still 3 because N1 dominates the max
        CHECK(p.Z21 == 2.0);
        CHECK(p.Z22 == 0.0);
        CHECK(p.Z23 == 0.0);
        CHECK(p.alpha == 3.0);
    }

    TEST_CASE("profile validation") {
        CHECK_THROWS_AS(profile_complex_gaussian(1), InputError);
        CHECK_THROWS_AS(profile_group_characters(IntegerSet::of({3})), InputError);
    }

    TEST_CASE("group character profiles") {
        const MomentProfile sidon = profile_group_characters(generate_powers(2, 8));
        CHECK(sidon.N1 == 1.0);
        CHECK(sidon.N2 == 1.0);
        CHECK(sidon.Z21 == 1.0);
        CHECK(sidon.alpha == 2.0);
        CHECK(sidon.beta == -1.0);  // beta = -Z2 <= 0 for characters

        const MomentProfile block = profile_group_characters(IntegerSet::of({0, 1, 2, 3}));
        CHECK(block.Z21 == 3.0);
        CHECK(block.alpha == 4.0);
        CHECK(block.beta == -3.0);

        const MomentProfile circle = profile_group_characters(generate_circle(25));
        CHECK(circle.alpha <= 3.0);
    }

    TEST_CASE("khintchine constants") {
        const MomentProfile c = profile_complex_gaussian(3);
        CHECK(khintchine_constant(c, c) == doctest::Approx(1.0 / std::sqrt(2.0)));
        const MomentProfile r = profile_real_gaussian(3);
        CHECK(khintchine_constant(r, r) == doctest::Approx(1.0 / std::sqrt(3.0)));
        const MomentProfile g = profile_group_characters(generate_powers(2, 6));
        CHECK(khintchine_constant(g, g) == doctest::Approx(1.0 / std::sqrt(2.0)));
    }

    TEST_CASE("group crosscheck: moment summation equals the histogram Z2") {
        CHECK(group_profile_crosscheck(generate_powers(2, 8)).equal);
        const CrosscheckReport block = group_profile_crosscheck(IntegerSet::of({0, 1, 2, 3}));
        CHECK(block.equal);
        CHECK(block.z21_moment_sum == 3);
        CHECK(group_profile_crosscheck(generate_greedy_sidon(15)).z21_moment_sum == 1);

        Rng rng(107);
        for (int trial = 0; trial < 40; ++trial) {
            const IntegerSet v = random_set(rng, 2 + static_cast<int>(rng.uniform_int(0, 13)), -60, 60);
            CHECK(group_profile_crosscheck(v).equal);
        }
    }

    TEST_CASE("monte carlo agrees with exact moments") {
        const MonteCarloProfile mc = monte_carlo_profile(GaussianKind::Complex, 3, 200'000, 4242);
        CHECK_FALSE(mc.flagged);
        CHECK(std::abs(mc.n1 - 2.0) <= 0.05);
        CHECK(std::abs(mc.n2 - 1.0) <= 0.02);
        CHECK(std::abs(mc.z21 - 1.0) <= 0.05);

        const MonteCarloProfile mr = monte_carlo_profile(GaussianKind::Real, 3, 200'000, 4242);
        CHECK_FALSE(mr.flagged);
        CHECK(std::abs(mr.n1 - 3.0) <= 0.1);
        CHECK(std::abs(mr.z21 - 2.0) <= 0.05);
    }

    TEST_CASE("monte carlo is deterministic and shard-stable") {
        const MonteCarloProfile a = monte_carlo_profile(GaussianKind::Complex, 2, 50'000, 9);
        const MonteCarloProfile b = monte_carlo_profile(GaussianKind::Complex, 2, 50'000, 9);
        CHECK(a.n1 == b.n1);
        CHECK(a.z21 == b.z21);
        CHECK_THROWS_AS(monte_carlo_profile(GaussianKind::Complex, 2, 100, 1), InputError);
    }
}
