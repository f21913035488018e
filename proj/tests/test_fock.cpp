#include <doctest.h>

#include "helpers.hpp"
#include "z2lab/fock.hpp"

using namespace z2lab;

namespace {

// The five published 10x10 matrices, as signed (row, col) unit entries
// (1-indexed).  fixture_n2 must reproduce them exactly.
struct Entry {
    int sign, row, col;
};
const std::vector<std::vector<Entry>> kFixtureEntries = {
    {{1, 6, 1}, {1, 5, 2}, {1, 4, 3}, {1, 3, 4}, {1, 2, 5}, {1, 1, 6}},
    {{-1, 9, 1}, {-1, 8, 2}, {-1, 7, 3}, {1, 3, 7}, {1, 2, 8}, {1, 1, 9}},
    {{-1, 8, 4}, {-1, 7, 5}, {-1, 5, 7}, {-1, 4, 8}, {1, 1, 10}, {1, 10, 1}},
    {{1, 10, 2}, {1, 9, 4}, {1, 6, 7}, {-1, 7, 6}, {-1, 4, 9}, {-1, 2, 10}},
    {{1, 10, 3}, {1, 9, 5}, {1, 8, 6}, {1, 6, 8}, {1, 5, 9}, {1, 3, 10}},
};

CMat from_entries(const std::vector<Entry>& entries) {
    CMat m(10, 10);
    for (const Entry& e : entries) m(e.row - 1, e.col - 1) = static_cast<double>(e.sign);
    return m;
}

}  // namespace

TEST_SUITE("fock") {
    TEST_CASE("build_family dimensions and exact trace identities") {
        for (int n : {1, 2, 3}) {
            const IsometryFamily fam = build_family(n);
            const auto d = binomial(2 * n + 1, n + 1);
            const auto tr = binomial(2 * n, n);
            CHECK(fam.d == d);
            CHECK(static_cast<int>(fam.ops.size()) == 2 * n + 1);

            CMat sum_col = CMat::zero(fam.d, fam.d);
            CMat sum_row = CMat::zero(fam.d, fam.d);
            for (const CMat& a : fam.ops) {
                CHECK(gram(a).trace().real() == static_cast<double>(tr));  // exact integers
                sum_col += gram(a);
                sum_row += cogram(a);
            }
            const CMat target = static_cast<cd>(n + 1) * CMat::identity(fam.d);
            CHECK(frobenius_distance(sum_col, target) == 0.0);
            CHECK(frobenius_distance(sum_row, target) == 0.0);
        }
    }

    TEST_CASE("each generator is a partial isometry, exactly") {
        for (int n : {1, 2, 3}) {
            const IsometryFamily fam = build_family(n);
            for (const CMat& a : fam.ops) {
                const CMat p = gram(a);
                CHECK(frobenius_distance(p * p, p) == 0.0);
            }
        }
    }

    TEST_CASE("dimension cap") {
        CHECK_THROWS_AS(build_family(7), DimensionCapError);
        CHECK_THROWS_AS(build_family(0), InputError);
    }

    TEST_CASE("fixture_n2 reproduces the published matrices entrywise") {
        const IsometryFamily fix = fixture_n2();
        REQUIRE(fix.d == 10);
        REQUIRE(fix.ops.size() == 5);
        for (int i = 0; i < 5; ++i) {
            const CMat expected = from_entries(kFixtureEntries[static_cast<std::size_t>(i)]);
            CHECK(frobenius_distance(fix.ops[static_cast<std::size_t>(i)], expected) == 0.0);
        }
        // spot values pinned separately
        CHECK(fix.ops[0](5, 0) == cd{1.0, 0.0});   // a_1 at (6,1)
        CHECK(fix.ops[1](8, 0) == cd{-1.0, 0.0});  // a_2 at (9,1)
        CHECK(gram(fix.ops[4]).trace().real() == 6.0);
    }

    TEST_CASE("verify_family on built families") {
        for (int n : {1, 2, 3}) {
            const FamilyReport rep = verify_family(build_family(n), 1e-12, 50, 42);
            CHECK(rep.passed);
            CHECK(rep.trace_dev == 0.0);
            CHECK(rep.trace_orth_dev == 0.0);
            CHECK(rep.sum_col_dev == 0.0);
            CHECK(rep.sum_row_dev == 0.0);
            CHECK(rep.partial_isometry_dev <= 1e-12);
            CHECK(rep.trace_b_dev <= 1e-10);
            CHECK(rep.car_checked);
            CHECK(rep.car_anti_dev == 0.0);
            CHECK(rep.car_mixed_dev == 0.0);
        }
    }

    TEST_CASE("fixture passes verify_family at tol 0") {
        const FamilyReport rep = verify_family(fixture_n2(), 0.0, 50, 42);
        CHECK(rep.passed);
        CHECK(rep.trace_dev == 0.0);
        CHECK(rep.car_anti_dev == 0.0);
        CHECK(rep.car_mixed_dev == 0.0);
        CHECK(rep.expected_trace == 6);
    }

    TEST_CASE("single basis vector coefficient reproduces property 1") {
        const IsometryFamily fam = build_family(2);
        const CMat b = fam.ops[0];  // g = e_1
        CHECK(gram(b).trace().real() == 6.0);
    }

    TEST_CASE("verify_family trials are deterministic in the seed") {
        const IsometryFamily fam = build_family(1);
        const FamilyReport r1 = verify_family(fam, 1e-12, 25, 1234);
        const FamilyReport r2 = verify_family(fam, 1e-12, 25, 1234);
        CHECK(r1.partial_isometry_dev == r2.partial_isometry_dev);
        CHECK(r1.trace_b_dev == r2.trace_b_dev);
    }

    TEST_CASE("fixture and build_family(2) share all invariants") {
        // entrywise they differ (basis gauge), but every checked quantity
        // must agree
        const FamilyReport a = verify_family(build_family(2), 1e-12, 30, 7);
        const FamilyReport b = verify_family(fixture_n2(), 1e-12, 30, 7);
        CHECK(a.passed);
        CHECK(b.passed);
        CHECK(a.expected_trace == b.expected_trace);
        CHECK(a.d == b.d);
    }
}
