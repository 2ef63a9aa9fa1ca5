#include "polyg/render.hpp"

#include "polyg/selfcheck.hpp"

#include <doctest.h>

using polyg::BiPoly;
using polyg::FamilyId;
using polyg::FamilyKind;
using polyg::FamilyTable;
using polyg::MultiIndex;
using polyg::Rational;

TEST_CASE("bipoly wire form is sorted ascending with full rationals")
{
    const BiPoly p = BiPoly::monomial(2, 0, 1) - BiPoly::monomial(0, 1, Rational(1, 2));
    const nlohmann::json j = polyg::to_json(p);
    REQUIRE(j.size() == 2);
    CHECK(j[0]["xdeg"] == 0);
    CHECK(j[0]["ldeg"] == 1);
    CHECK(j[0]["coef"] == "-1/2");
    CHECK(j[1]["xdeg"] == 2);
    CHECK(j[1]["coef"] == "1/1");
    CHECK(polyg::bipoly_from_json(j) == p);
    CHECK(polyg::to_json(BiPoly()).empty());
}

TEST_CASE("table JSON round-trips for every family kind")
{
    const std::vector<FamilyId> ids = {
        {FamilyKind::euler},
        {FamilyKind::gen_eg, 2},
        {FamilyKind::degen_genocchi},
        {FamilyKind::multi_eg, 0, MultiIndex({1, -2})},
        {FamilyKind::degen_multi_eg, 0, MultiIndex({2})},
        {FamilyKind::multi_bernoulli, 0, MultiIndex({1, 1}), true},
        {FamilyKind::multi_bernoulli, 0, MultiIndex({2}), false},
    };
    for (const FamilyId& id : ids) {
        const FamilyTable t = polyg::build_family(id, 6, 8);
        const FamilyTable back = polyg::table_from_json(polyg::to_json(t));
        CHECK(back.id() == t.id());
        CHECK(back.rows() == t.rows());
    }
}

TEST_CASE("table JSON round-trips over a sampled multi-index grid")
{
    for (const MultiIndex& k : polyg::sample_multi_indices(1, 8, 1, 3, -2, 3))
        for (FamilyKind kind : {FamilyKind::multi_eg, FamilyKind::degen_multi_eg}) {
            const FamilyTable t = polyg::build_family({kind, 0, k}, 5, 5);
            const FamilyTable back = polyg::table_from_json(polyg::to_json(t));
            CHECK(back.id() == t.id());
            CHECK(back.rows() == t.rows());
        }
}

TEST_CASE("table text and csv")
{
    const FamilyTable e = polyg::build_family({FamilyKind::euler}, 2, 4);
    CHECK(polyg::render_table_text(e) == "1\nx - 1/2\nx^2 - x\n");
    CHECK(polyg::render_table_csv(e) == "n,value\n0,1\n1,x - 1/2\n2,x^2 - x\n");
}

TEST_CASE("report serialization carries both sides on failure only")
{
    polyg::CheckReport rep;
    rep.name = "2.1";
    rep.k = MultiIndex({1, 2});
    rep.m = 3;
    rep.n_max = 1;
    rep.record(0, BiPoly(), BiPoly());
    rep.record(1, BiPoly::var_x(), BiPoly::constant(1));

    const nlohmann::json j = polyg::to_json(rep);
    CHECK(j["theorem"] == "2.1");
    CHECK(j["k"] == nlohmann::json::array({1, 2}));
    CHECK(j["m"] == 3);
    CHECK(j["n_max"] == 1);
    CHECK(j["results"][0]["status"] == "pass");
    CHECK_FALSE(j["results"][0].contains("lhs"));
    CHECK(j["results"][1]["status"] == "fail");
    CHECK(j["results"][1]["lhs"][0]["xdeg"] == 1);
    CHECK(j["results"][1]["rhs"][0]["coef"] == "1/1");

    const std::string text = polyg::render_reports_text({rep});
    CHECK(text.find("thm 2.1 k=(1,2) m=3") != std::string::npos);
    CHECK(text.find("FAIL (1 of 2)") != std::string::npos);
    CHECK(text.find("n=1: lhs = x ; rhs = 1") != std::string::npos);

    const std::string csv = polyg::render_reports_csv({rep});
    CHECK(csv.find("2.1,(1,2),,3,1,fail,x,1") != std::string::npos);
}
