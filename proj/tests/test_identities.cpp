#include "polyg/identities.hpp"

#include "polyg/render.hpp"

#include <doctest.h>

#include <stdexcept>

using polyg::BiPoly;
using polyg::CheckReport;
using polyg::IdentityChecker;
using polyg::MultiIndex;
using polyg::Rational;

TEST_CASE("theorem 2.1: value at 1")
{
    IdentityChecker checker(8, 8);
    const CheckReport rep = checker.thm_2_1(MultiIndex({1}));
    CHECK(rep.all_pass());
    CHECK(rep.results.size() == 9);
    // Hand values: A_1^{(1)}(1) = G_1(1) = 1 and G_2(1) = 1 (sum -1+1+1).
    const polyg::FamilyTable g =
        polyg::build_family({polyg::FamilyKind::multi_eg, 0, MultiIndex({1})}, 2, 4);
    CHECK(polyg::family_value_at(g, 1, Rational(1), std::nullopt) == BiPoly::constant(1));
    CHECK(polyg::family_value_at(g, 2, Rational(1), std::nullopt) == BiPoly::constant(1));

    // n < r exercises the vanishing clause.
    const CheckReport rep2 = checker.thm_2_1(MultiIndex({2, 1}));
    CHECK(rep2.all_pass());
    CHECK(rep2.results[1].pass);
    CHECK(rep2.results[1].lhs.is_zero()); // cleared on pass
}

TEST_CASE("theorem 2.2: expansion in gen-eg polynomials")
{
    IdentityChecker checker(10, 10);
    CHECK(checker.thm_2_2(MultiIndex({2})).all_pass());
    CHECK(checker.thm_2_2(MultiIndex({1, 1, 1})).all_pass());
    CHECK(checker.thm_2_2(MultiIndex({-1, 2})).all_pass());

    // At n = r the sum collapses to S1^{(k)}(r,r) * A_r^{(r)}(x).
    const MultiIndex k({0, 0}); // S1^{(0,0)}(2,2) = 2
    const polyg::FamilyTable lhs =
        polyg::build_family({polyg::FamilyKind::multi_eg, 0, k}, 2, 4);
    const polyg::FamilyTable base =
        polyg::build_family({polyg::FamilyKind::gen_eg, 2}, 2, 4);
    CHECK(lhs.row(2) == Rational(2) * base.row(2));
}

TEST_CASE("theorem 2.3: boundary sum")
{
    IdentityChecker checker(10, 10);
    const CheckReport rep = checker.thm_2_3(MultiIndex({1}));
    CHECK(rep.all_pass());
    // G_1(1) + G_1(0) = 2, matching 2 * 1! * S1^{(1)}(1,1) * S2(1,1).
    const polyg::FamilyTable g =
        polyg::build_family({polyg::FamilyKind::genocchi}, 1, 2);
    const BiPoly sum = polyg::family_value_at(g, 1, Rational(1), std::nullopt) +
                       polyg::family_value_at(g, 1, Rational(0), std::nullopt);
    CHECK(sum == BiPoly::constant(2));

    CHECK(checker.thm_2_3(MultiIndex({1, 2})).all_pass());
    CHECK(checker.thm_2_3(MultiIndex({-2, 0, 3})).all_pass());
}

TEST_CASE("theorem 2.4: degenerate expansion, exponent as printed")
{
    IdentityChecker checker(10, 10);
    CHECK(checker.thm_2_4(MultiIndex({3})).all_pass());
    CHECK(checker.thm_2_4(MultiIndex({1, 1})).all_pass());
    CHECK(checker.thm_2_4(MultiIndex({-1, 2})).all_pass());
}

TEST_CASE("theorem 2.5: binomial convolution with falling factorials")
{
    IdentityChecker checker(10, 10);
    const CheckReport rep = checker.thm_2_5(MultiIndex({2, 1}));
    CHECK(rep.all_pass());
    // n = 0 compares zeros on both sides when r >= 1.
    CHECK(rep.results[0].pass);
    CHECK(checker.thm_2_5(MultiIndex({0})).all_pass());
    CHECK(checker.thm_2_5(MultiIndex({2, -1, 1})).all_pass());
}

TEST_CASE("theorem 2.6: distribution formula for odd m")
{
    IdentityChecker checker(8, 8);
    CHECK(checker.thm_2_6(MultiIndex({1}), 3).all_pass());
    CHECK(checker.thm_2_6(MultiIndex({2, 1}), 1).all_pass()); // m = 1 consistency
    CHECK(checker.thm_2_6(MultiIndex({-1, 2}), 5).all_pass());
    CHECK_THROWS_AS(checker.thm_2_6(MultiIndex({1}), 2), std::invalid_argument);
    CHECK_THROWS_AS(checker.thm_2_6(MultiIndex({1}), 0), std::invalid_argument);
    CHECK_THROWS_AS(checker.thm_2_6(MultiIndex({1}), -3), std::invalid_argument);

    // n < r rows pass through the vanishing of both sides.
    const CheckReport rep = checker.thm_2_6(MultiIndex({1, 1, 1}), 3);
    CHECK(rep.all_pass());
    CHECK(rep.results[0].pass);
    CHECK(rep.results[2].pass);
}

TEST_CASE("checkers reject the empty multi-index")
{
    IdentityChecker checker(4, 4);
    CHECK_THROWS_AS(checker.thm_2_1(MultiIndex()), std::invalid_argument);
    CHECK_THROWS_AS(checker.thm_2_6(MultiIndex(), 1), std::invalid_argument);
}

TEST_CASE("checker construction validates its bounds")
{
    CHECK_THROWS_AS(IdentityChecker(-1, 4), std::invalid_argument);
    CHECK_THROWS_AS(IdentityChecker(8, 4), std::invalid_argument);
    // n_max = 0 is degenerate but legal: single-row reports.
    IdentityChecker tiny(0, 0);
    const CheckReport rep = tiny.thm_2_5(MultiIndex({1}));
    CHECK(rep.all_pass());
    CHECK(rep.results.size() == 1);
}

TEST_CASE("suite shapes and determinism")
{
    IdentityChecker checker(4, 4);
    // One report per theorem with a single m.
    CHECK(checker.run_theorems(MultiIndex({1}), {1}).size() == 6);
    CHECK(checker.run_theorems(MultiIndex({1}), {1, 3, 5}).size() == 8);
    CHECK(checker.run_suite({}, {1}).empty());
    // Depth-0 entries are skipped by the suite.
    CHECK(checker.run_suite({MultiIndex()}, {1}).empty());
    CHECK(checker.run_suite({MultiIndex(), MultiIndex({2})}, {1}).size() == 6);

    // Re-running yields byte-identical reports.
    IdentityChecker again(4, 4);
    const auto a = checker.run_theorems(MultiIndex({1, -2}), {1, 3});
    const auto b = again.run_theorems(MultiIndex({1, -2}), {1, 3});
    CHECK(polyg::to_json(a).dump() == polyg::to_json(b).dump());
}

TEST_CASE("parallel suite aggregation matches the serial run byte for byte")
{
    const std::vector<MultiIndex> ks = {MultiIndex({1}),     MultiIndex({-2}),
                                        MultiIndex(),        MultiIndex({2, 1}),
                                        MultiIndex({0, -1}), MultiIndex({1, 1, 2}),
                                        MultiIndex({3}),     MultiIndex({-1, 3})};
    IdentityChecker serial(6, 6);
    const auto a = serial.run_suite(ks, {1, 3});
    const auto b = polyg::run_suite_parallel(ks, {1, 3}, 6, 6, 4);
    const auto c = polyg::run_suite_parallel(ks, {1, 3}, 6, 6, 1);
    CHECK(polyg::to_json(a).dump() == polyg::to_json(b).dump());
    CHECK(polyg::to_json(a).dump() == polyg::to_json(c).dump());
    CHECK(a.size() == 7 * 7); // seven nonempty indices, 5 + 2 reports each
}

TEST_CASE("grid enumeration is exhaustive and ordered")
{
    const auto grid = polyg::multi_index_grid(3, -2, 3);
    CHECK(grid.size() == 6 + 36 + 216);
    CHECK(grid.front() == MultiIndex({-2}));
    CHECK(grid.back() == MultiIndex({3, 3, 3}));
    CHECK(grid[6] == MultiIndex({-2, -2}));
}

TEST_CASE("a broken identity is reported with both sides")
{
    // Compare euler rows against genocchi rows; they differ from n = 0 on.
    CheckReport rep;
    rep.name = "synthetic";
    rep.n_max = 1;
    const polyg::FamilyTable e = polyg::build_family({polyg::FamilyKind::euler}, 1, 2);
    const polyg::FamilyTable g = polyg::build_family({polyg::FamilyKind::genocchi}, 1, 2);
    for (int n = 0; n <= 1; ++n)
        rep.record(n, e.row(n), g.row(n));
    CHECK_FALSE(rep.all_pass());
    CHECK(rep.failure_count() == 2);
    CHECK(rep.results[0].lhs == BiPoly::constant(1));
    CHECK(rep.results[0].rhs.is_zero());
}
