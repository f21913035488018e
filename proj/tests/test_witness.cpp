#include <doctest.h>

#include <cmath>
#include <numbers>

#include "z2lab/rng.hpp"
#include "z2lab/witness.hpp"

using namespace z2lab;

namespace {

IntegerSet dense_random_set(Rng& rng, int size, std::int64_t span) {
    std::vector<std::int64_t> v;
    while (IntegerSet::of(v).size() < size) v.push_back(rng.uniform_int(0, span));
    return IntegerSet::of(std::move(v));
}

}  // namespace

TEST_SUITE("witness") {
    TEST_CASE("build_witness shapes") {
        PatternWitness five{PatternKind::FivePairs, {0, 1, 10, 11, 20, 21, 30, 31, 40, 41}, 1};
        const TrigMatrixPoly p5 = build_witness(five);
        CHECK(p5.tuple.count() == 10);
        CHECK(p5.tuple.dim() == 10);

        PatternWitness three{PatternKind::ThreeAPs, {0, 1, 2, 10, 11, 12, 20, 21, 22}, 1};
        const TrigMatrixPoly p3 = build_witness(three);
        CHECK(p3.tuple.count() == 9);
        CHECK(p3.tuple.dim() == 3);
        // middle coefficient of each block is doubled
        CHECK(frobenius_distance(p3.tuple.mats[1], 2.0 * p3.tuple.mats[0]) == 0.0);

        PatternWitness ap{PatternKind::AP5, {4, 7, 10, 13, 16}, 3};
        const TrigMatrixPoly pa = build_witness(ap);
        CHECK(pa.tuple.count() == 5);
        CHECK(pa.tuple.dim() == 1);
        CHECK(pa.tuple.mats[2](0, 0).real() == 3.0);

        PatternWitness bad{PatternKind::AP5, {0, 1, 2, 3, 5}, 1};
        CHECK_THROWS_AS(build_witness(bad), InputError);
    }

    TEST_CASE("consistent audit below the threshold") {
        const AuditResult r = converse_audit(generate_powers(2, 10), 1e-6);
        CHECK(r.consistent());
        CHECK(r.z2.z2 == 1);
    }

    TEST_CASE("violating audit on a consecutive block") {
        // {0..13} has z2 = 13 and contains every pattern
        const AuditResult r = converse_audit(IntegerSet::of({0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13}), 1e-6);
        REQUIRE_FALSE(r.consistent());
        CHECK(r.z2.z2 == 13);
        CHECK(r.violation->pattern.kind == PatternKind::FivePairs);  // priority order
        CHECK(r.violation->ratio.violates);
        CHECK(r.violation->ratio.ratio_upper < kOneOverSqrt2 - 0.009);
    }

    TEST_CASE("audits on seeded random dense sets always find a pattern") {
        Rng rng(211);
        int violations = 0;
        for (int trial = 0; trial < 30; ++trial) {
            const IntegerSet v = dense_random_set(rng, 40, 110);
            const AuditResult r = converse_audit(v, 1e-5);
            if (r.z2.z2 >= 7) {
                ++violations;
                REQUIRE_FALSE(r.consistent());
                CHECK(r.violation->ratio.violates);
            }
        }
        CHECK(violations >= 20);  // dense draws essentially always exceed 6
    }

    TEST_CASE("abelian ratio closed forms") {
        const AbelianRatio t1 = abelian_ratio(1, AbelianCase::Torus);
        CHECK(t1.a_m == doctest::Approx(6.0));  // 3 * sqrt(4)
        CHECK(t1.ratio == doctest::Approx(4.0 / (std::numbers::pi * std::sqrt(3.0))));

        const AbelianRatio t2 = abelian_ratio(2, AbelianCase::Torus);
        CHECK(t2.a_m == doctest::Approx(10.0 * std::sqrt(6.0)));
        CHECK(t2.b_m == doctest::Approx(24.0 * std::sqrt(5.0) / std::numbers::pi));

        const AbelianRatio z2 = abelian_ratio(2, AbelianCase::Z2Products);
        CHECK(z2.b_m == doctest::Approx(10.0 * 3.0 / std::sqrt(5.0)));

        CHECK_THROWS_AS(abelian_ratio(0, AbelianCase::Torus), InputError);
    }

    TEST_CASE("abelian ratios decrease monotonically to their limits") {
        for (const auto which : {AbelianCase::Torus, AbelianCase::Z2Products}) {
            const double limit = abelian_ratio_limit(which);
            double prev = HUGE_VAL;
            for (int m = 1; m <= 50; ++m) {
                const double r = abelian_ratio(m, which).ratio;
                CHECK(r < prev);
                CHECK(r > limit);
                prev = r;
            }
            CHECK(std::abs(abelian_ratio(2000, which).ratio - limit) <= 0.01);
        }
    }

    TEST_CASE("abelian numeric check at m = 1, 2") {
        for (int m : {1, 2}) {
            const AbelianCheck torus = abelian_ratio_numeric_check(m, AbelianCase::Torus, 1e-6);
            CHECK(torus.passed);
            CHECK(torus.a_dev <= 1e-6 * torus.expected.a_m);
            CHECK(torus.b_dev <= 1e-6 * torus.expected.b_m);

            const AbelianCheck z2 = abelian_ratio_numeric_check(m, AbelianCase::Z2Products, 1e-6);
            CHECK(z2.passed);
            CHECK_FALSE(z2.b_quadrature.has_value());
        }
        CHECK_THROWS_AS(abelian_ratio_numeric_check(4, AbelianCase::Torus, 1e-6), InputError);
    }
}
