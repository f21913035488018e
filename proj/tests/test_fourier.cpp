#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "z2lab/fock.hpp"
#include "z2lab/fourier.hpp"
#include "z2lab/intset.hpp"

using namespace z2lab;
using testutil::rel_err;

namespace {

TrigMatrixPoly scalar_poly(std::initializer_list<double> coeffs, std::initializer_list<std::int64_t> freqs) {
    TrigMatrixPoly p;
    for (double c : coeffs) {
        CMat m(1, 1);
        m(0, 0) = c;
        p.tuple.mats.push_back(m);
    }
    p.tuple.frequencies = std::vector<std::int64_t>(freqs);
    return p;
}

// the canonical 10-term witness: A_{2i-1} = A_{2i} = B_i on a FivePairs pattern
TrigMatrixPoly five_pairs_poly(std::int64_t diff = 1) {
    TrigMatrixPoly p;
    const IsometryFamily fam = build_family(2);
    std::vector<std::int64_t> freqs;
    for (int i = 0; i < 5; ++i) {
        p.tuple.mats.push_back(fam.ops[static_cast<std::size_t>(i)]);
        p.tuple.mats.push_back(fam.ops[static_cast<std::size_t>(i)]);
        freqs.push_back(100 * (i + 1));
        freqs.push_back(100 * (i + 1) + diff);
    }
    p.tuple.frequencies = std::move(freqs);
    return p;
}

TrigMatrixPoly three_aps_poly() {
    TrigMatrixPoly p;
    const IsometryFamily fam = build_family(1);
    std::vector<std::int64_t> freqs;
    for (int i = 0; i < 3; ++i) {
        p.tuple.mats.push_back(fam.ops[static_cast<std::size_t>(i)]);
        p.tuple.mats.push_back(2.0 * fam.ops[static_cast<std::size_t>(i)]);
        p.tuple.mats.push_back(fam.ops[static_cast<std::size_t>(i)]);
        freqs.push_back(50 * (i + 1));
        freqs.push_back(50 * (i + 1) + 1);
        freqs.push_back(50 * (i + 1) + 2);
    }
    p.tuple.frequencies = std::move(freqs);
    return p;
}

TrigMatrixPoly random_poly(Rng& rng, int d, int n, std::int64_t freq_span) {
    TrigMatrixPoly p;
    std::vector<std::int64_t> freqs;
    while (static_cast<int>(freqs.size()) < d) {
        const std::int64_t k = rng.uniform_int(-freq_span, freq_span);
        if (std::find(freqs.begin(), freqs.end(), k) == freqs.end()) freqs.push_back(k);
    }
    p.tuple = testutil::random_tuple(rng, d, n);
    p.tuple.frequencies = std::move(freqs);
    return p;
}

}  // namespace

TEST_SUITE("fourier") {
    TEST_CASE("scalar oracle integral: mean of |1 + e^{2 pi i m t}| is 4/pi") {
        for (std::int64_t m : {1, 2, 5}) {
            const auto p = scalar_poly({1.0, 1.0}, {0, m});
            const QuadratureResult q = l1_s1_norm(p, 1e-9);
            CHECK(q.converged);
            CHECK(std::abs(q.value - 4.0 / std::numbers::pi) <= 1e-8);
        }
    }

    TEST_CASE("single term integrates to its trace norm") {
        Rng rng(5);
        TrigMatrixPoly p;
        p.tuple.mats.push_back(testutil::random_matrix(rng, 3, 3));
        p.tuple.frequencies = std::vector<std::int64_t>{7};
        const QuadratureResult q = l1_s1_norm(p, 1e-8);
        CHECK(std::abs(q.value - trace_norm(p.tuple.mats[0])) <= 1e-7);
    }

    TEST_CASE("10-term witness integrates to 24 sqrt(5) / pi") {
        const QuadratureResult q = l1_s1_norm(five_pairs_poly(), 1e-7);
        CHECK(q.converged);
        CHECK(std::abs(q.value - 24.0 * std::sqrt(5.0) / std::numbers::pi) <= 1e-6);
    }

    TEST_CASE("9-term witness integrates to 4 sqrt(3)") {
        const QuadratureResult q = l1_s1_norm(three_aps_poly(), 1e-7);
        CHECK(q.converged);
        CHECK(std::abs(q.value - 4.0 * std::sqrt(3.0)) <= 1e-6);
    }

    TEST_CASE("scalar AP5 witness integrates to 3") {
        const auto p = scalar_poly({1, 2, 3, 2, 1}, {3, 5, 7, 9, 11});
        const QuadratureResult q = l1_s1_norm(p, 1e-8);
        CHECK(q.converged);
        CHECK(std::abs(q.value - 3.0) <= 1e-7);
    }

    TEST_CASE("factorization identity for the FivePairs witness") {
        // l1 = (int |1+e^{2 pi i t}| dt) * sqrt(5) * 6 with the integral 4/pi
        const auto scalar = scalar_poly({1.0, 1.0}, {0, 1});
        const double base = l1_s1_norm(scalar, 1e-9).value;
        CHECK(std::abs(base - 4.0 / std::numbers::pi) <= 1e-8);
        const double witness = l1_s1_norm(five_pairs_poly(), 1e-8).value;
        CHECK(std::abs(witness - base * std::sqrt(5.0) * 6.0) <= 1e-6);
    }

    TEST_CASE("frequency translation leaves the l1 norm unchanged") {
        Rng rng(67);
        const TrigMatrixPoly p = random_poly(rng, 4, 2, 12);
        TrigMatrixPoly shifted = p;
        for (auto& k : *shifted.tuple.frequencies) k += 1000;
        const double a = l1_s1_norm(p, 1e-8).value;
        const double b = l1_s1_norm(shifted, 1e-8).value;
        CHECK(std::abs(a - b) <= 1e-7 * std::max(1.0, a));
    }

    TEST_CASE("linf on fixed scalar examples") {
        const auto one_term = scalar_poly({2.5}, {3});
        CHECK(rel_err(linf_norm(one_term, 1e-6), 2.5) <= 1e-4);

        const auto two_term = scalar_poly({1.0, 1.0}, {0, 1});
        CHECK(std::abs(linf_norm(two_term, 1e-6) - 2.0) <= 1e-4);

        const auto three_term = scalar_poly({1.0, 1.0, 1.0}, {0, 1, 2});
        // maximum 3 attained at t = 0; fine-grid oracle
        double oracle = 0.0;
        for (int j = 0; j < 200000; ++j) {
            const double t = static_cast<double>(j) / 200000;
            oracle = std::max(oracle, std::abs(eval_poly(three_term, t)(0, 0)));
        }
        CHECK(std::abs(oracle - 3.0) <= 1e-6);
        CHECK(std::abs(linf_norm(three_term, 1e-6) - oracle) <= 1e-4);
    }

    TEST_CASE("linf upper-estimates the grid sup") {
        Rng rng(71);
        for (int trial = 0; trial < 3; ++trial) {
            const TrigMatrixPoly p = random_poly(rng, 3, 2, 6);
            const double sup = linf_norm(p, 1e-4);
            for (int j = 0; j < 2000; ++j)
                CHECK(op_norm(eval_poly(p, static_cast<double>(j) / 2000)) <= sup + 1e-9);
        }
    }

    TEST_CASE("tau_moments on fixed examples") {
        SUBCASE("single term") {
            Rng rng(73);
            TrigMatrixPoly p;
            p.tuple.mats.push_back(testutil::random_matrix(rng, 3, 3));
            p.tuple.frequencies = std::vector<std::int64_t>{4};
            const TauMoments tm = tau_moments(p);
            const CMat cc = gram(p.tuple.mats[0]);
            CHECK(frobenius_distance(tm.m1, cc) <= 1e-12);
            CHECK(frobenius_distance(tm.m2, cc * cc) <= 1e-12);
        }
        SUBCASE("two unit scalars on {0,1}: m1 = 2, m2 = 6") {
            const auto p = scalar_poly({1.0, 1.0}, {0, 1});
            const TauMoments tm = tau_moments(p);
            CHECK(tm.m1(0, 0).real() == doctest::Approx(2.0));
            CHECK(tm.m2(0, 0).real() == doctest::Approx(6.0));
        }
        SUBCASE("unit scalars on a Sidon set: m2 = 2 d^2 - d") {
            const IntegerSet sidon = generate_greedy_sidon(8);
            TrigMatrixPoly p;
            for (int i = 0; i < 8; ++i) {
                CMat m(1, 1);
                m(0, 0) = 1.0;
                p.tuple.mats.push_back(m);
            }
            p.tuple.frequencies = sidon.elements;
            const TauMoments tm = tau_moments(p);
            CHECK(tm.m2(0, 0).real() == doctest::Approx(2.0 * 64 - 8));
        }
    }

    TEST_CASE("tau_moments matches exact trapezoid integration") {
        // uniform grids beat the bandwidth, so the sums below are exact
        Rng rng(79);
        const TrigMatrixPoly p = random_poly(rng, 5, 2, 9);
        const int grid = 4 * 9 * 2 + 5;
        const TauMoments tm = tau_moments(p);
        const CMat m1_num = testutil::trapezoid_mean(
            [&](double t) { return gram(eval_poly(p, t)); }, grid, 2);
        CHECK(frobenius_distance(tm.m1, m1_num) <= 1e-10 * std::max(1.0, m1_num.frobenius()));
        const CMat m2_num = testutil::trapezoid_mean(
            [&](double t) {
                const CMat ff = gram(eval_poly(p, t));
                return ff * ff;
            },
            grid, 2);
        CHECK(frobenius_distance(tm.m2, m2_num) <= 1e-9 * std::max(1.0, m2_num.frobenius()));
    }

    TEST_CASE("bucketed path agrees with the trapezoid oracle past d = 40") {
        Rng rng(83);
        TrigMatrixPoly big;
        std::vector<std::int64_t> freqs;
        for (int i = 0; i < 41; ++i) {
            CMat m(1, 1);
            m(0, 0) = rng.normal();
            big.tuple.mats.push_back(m);
            freqs.push_back(3 * i + (i % 5));
        }
        big.tuple.frequencies = freqs;
        const TauMoments tm_big = tau_moments(big);
        const CMat m2_num = testutil::trapezoid_mean(
            [&](double t) {
                const CMat ff = gram(eval_poly(big, t));
                return ff * ff;
            },
            4 * 130 + 7, 1);
        CHECK(frobenius_distance(tm_big.m2, m2_num) <= 1e-8 * std::max(1.0, m2_num.frobenius()));
    }

    TEST_CASE("tau_moments rejects duplicate frequencies") {
        TrigMatrixPoly p;
        p.tuple.mats.push_back(CMat::identity(2));
        p.tuple.mats.push_back(CMat::identity(2));
        p.tuple.frequencies = std::vector<std::int64_t>{1, 1};
        CHECK_THROWS_AS(tau_moments(p), InputError);
    }

    TEST_CASE("moment inequality with alpha = 1 + z2") {
        Rng rng(89);
        SUBCASE("single term, alpha = 1") {
            TrigMatrixPoly p;
            p.tuple.mats.push_back(testutil::random_matrix(rng, 3, 3));
            p.tuple.frequencies = std::vector<std::int64_t>{2};
            CHECK(moment_inequality_check(p, 1.0, 1e-9));
        }
        SUBCASE("powers-of-two frequencies, alpha = 2") {
            for (int trial = 0; trial < 20; ++trial) {
                TrigMatrixPoly p;
                p.tuple = testutil::random_tuple(rng, 5, 2);
                p.tuple.frequencies = generate_powers(2, 5).elements;
                CHECK(moment_inequality_check(p, 2.0, 1e-9));
            }
        }
    }

    TEST_CASE("lem_bdd check: column mass below the sup norm squared") {
        Rng rng(97);
        SUBCASE("constant polynomial is the equality case") {
            TrigMatrixPoly p;
            p.tuple.mats.push_back(testutil::random_matrix(rng, 3, 3));
            p.tuple.frequencies = std::vector<std::int64_t>{0};
            CHECK(lem_bdd_check(p, 1e-6));
        }
        SUBCASE("random scalar polynomials: Parseval vs sup") {
            for (int trial = 0; trial < 10; ++trial) {
                TrigMatrixPoly p;
                std::vector<std::int64_t> freqs;
                for (int i = 0; i < 5; ++i) {
                    CMat m(1, 1);
                    m(0, 0) = rng.complex_normal();
                    p.tuple.mats.push_back(m);
                    freqs.push_back(i);
                }
                p.tuple.frequencies = freqs;
                CHECK(lem_bdd_check(p, 1e-6));
                // scalar oracle: sum |c_i|^2 <= (sup |f|)^2
                double mass = 0.0;
                for (const CMat& c : p.tuple.mats) mass += std::norm(c(0, 0));
                CHECK(mass <= std::pow(linf_norm(p, 1e-6), 2) + 1e-6);
            }
        }
        SUBCASE("10-term witness") { CHECK(lem_bdd_check(five_pairs_poly(), 1e-6)); }
    }

    TEST_CASE("khintchine ratio of the canonical witnesses") {
        SUBCASE("FivePairs: ratio approx 0.6974, violates") {
            const RatioReport r = khintchine_ratio(five_pairs_poly(), 1e-7);
            const double exact = (24.0 * std::sqrt(5.0) / std::numbers::pi) / (10.0 * std::sqrt(6.0));
            CHECK(r.violates);
            CHECK(r.ratio_lower <= exact + 1e-9);
            CHECK(r.ratio_upper >= exact - 1e-9);
            CHECK(r.ratio_upper < kOneOverSqrt2 - 0.009);
        }
        SUBCASE("ThreeAPs: ratio 2/3, violates") {
            const RatioReport r = khintchine_ratio(three_aps_poly(), 1e-7);
            CHECK(r.violates);
            CHECK(std::abs(0.5 * (r.ratio_lower + r.ratio_upper) - 2.0 / 3.0) <= 1e-5);
        }
        SUBCASE("AP5 scalars: ratio 3/sqrt(19), violates") {
            const auto p = scalar_poly({1, 2, 3, 2, 1}, {10, 13, 16, 19, 22});
            const RatioReport r = khintchine_ratio(p, 1e-7);
            CHECK(r.violates);
            CHECK(std::abs(0.5 * (r.ratio_lower + r.ratio_upper) - 3.0 / std::sqrt(19.0)) <= 1e-5);
        }
        SUBCASE("a Sidon polynomial does not violate") {
            Rng rng(101);
            TrigMatrixPoly p;
            p.tuple = testutil::random_tuple(rng, 4, 2);
            p.tuple.frequencies = generate_powers(2, 4).elements;
            const RatioReport r = khintchine_ratio(p, 1e-6);
            CHECK_FALSE(r.violates);  // >= 1/sqrt(2) by the direct theorem
        }
    }

    TEST_CASE("upper Khintchine bound on random tuples") {
        Rng rng(103);
        for (int trial = 0; trial < 25; ++trial) {
            const TrigMatrixPoly p = random_poly(rng, 4, 2, 16);
            const double l1 = l1_s1_norm(p, 1e-7).value;
            const double upper = s1_rc_upper(p.tuple, true).value;
            CHECK(l1 <= upper + 1e-6);
        }
    }

    TEST_CASE("quadrature validation") {
        CHECK_THROWS_AS(l1_s1_norm(scalar_poly({1.0}, {0}), -1.0), InputError);
        TrigMatrixPoly nofreq;
        nofreq.tuple.mats.push_back(CMat::identity(2));
        CHECK_THROWS_AS(l1_s1_norm(nofreq, 1e-7), InputError);
    }
}
