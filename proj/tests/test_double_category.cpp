#include <doctest.h>

#include "segal/double_category.hpp"
#include "segal/graph.hpp"
#include "segal/nerve.hpp"
#include "segal/segal_check.hpp"
#include "segal/tree.hpp"

using namespace segal;

namespace {

std::size_t hor(const DoubleCategory& d, const std::string& id) { return *d.hor().find_morphism(id); }
std::size_t ver(const DoubleCategory& d, const std::string& id) { return *d.ver().find_morphism(id); }

}  // namespace

TEST_SUITE("double_cat") {

TEST_CASE("W_2 is pointed and stable") {
    const auto w = w2_double_category();
    CHECK(w.objects().size() == 4);
    CHECK(w.hor().morphisms().size() == 8);
    CHECK(w.ver().morphisms().size() == 8);
    CHECK(w.squares().size() == 13);
    const auto report = validate_double_category(w);
    CHECK(report.ok());
    CHECK(report.stable);
    CHECK(report.grids_checked > 0);
    CHECK(check_pointed(w).ok);
    CHECK(check_stable(w).ok);
}

TEST_CASE("W_2 without its square loses stability at that span") {
    auto w = w2_double_category();
    w.remove_square(*w.find_square("sigma"));
    const auto s = check_stable(w);
    REQUIRE_FALSE(s.ok);
    CHECK(s.side == StabilityReport::Side::span);
    CHECK(s.hor == hor(w, "01>02"));
    CHECK(s.ver == ver(w, "01>>*"));
    CHECK(s.fillers == 0);
    CHECK_FALSE(validate_double_category(w).ok());
    CHECK_THROWS_AS(s_construction(w, 2), PreconditionError);
}

TEST_CASE("two squares on one span") {
    auto w = w2_double_category();
    w.add_square("tau", hor(w, "01>02"), hor(w, "*>12"), ver(w, "01>>*"), ver(w, "02>>12"));
    const auto s = check_stable(w);
    REQUIRE_FALSE(s.ok);
    CHECK(s.hor == hor(w, "01>02"));
    CHECK(s.ver == ver(w, "01>>*"));
    CHECK(s.fillers == 2);
}

TEST_CASE("square composition in W_2") {
    const auto w = w2_double_category();
    const auto sigma = *w.find_square("sigma");
    const auto id_right = horizontal_identity_square(w, ver(w, "02>>12"));
    CHECK(compose_squares_h(w, sigma, id_right) == sigma);
    const auto id_left = horizontal_identity_square(w, ver(w, "01>>*"));
    CHECK(compose_squares_h(w, id_left, sigma) == sigma);
    CHECK(compose_squares_v(w, vertical_identity_square(w, hor(w, "01>02")), sigma) == sigma);
    CHECK_THROWS_AS(compose_squares_h(w, sigma, sigma), PreconditionError);
}

TEST_CASE("pointedness needs a point and unique arrows") {
    auto w = w2_double_category();
    w.add_hor("extra", 0, 1);
    const auto p = check_pointed(w);
    CHECK_FALSE(p.ok);
    CHECK(p.object == std::optional<std::size_t>{1});
    DoubleCategory bare;
    bare.add_object("x");
    CHECK_THROWS_AS(check_pointed(bare), PreconditionError);
    CHECK(check_pointed(trivial_double_category()).ok);
    CHECK(validate_double_category(trivial_double_category()).ok());
}

TEST_CASE("S of W_2") {
    const auto w = w2_double_category();
    const auto s = s_construction(w, 4);
    CHECK(s.level_size(0) == 1);
    CHECK(s.level_size(1) == w.objects().size());
    CHECK(s.level_size(2) == w.hor().morphisms().size());
    CHECK(s.level_size(3) == w.squares().size());
    CHECK(validate(s).ok());
    CHECK(segal2_check(s).passed());
    for (int n = 0; n <= 4; ++n)
        for (const auto& st : staircases(w, n))
            CHECK_FALSE(check_staircase(w, st).has_value());
}

TEST_CASE("staircase descriptors round trip") {
    const auto w = w2_double_category();
    for (const auto& st : staircases(w, 3)) {
        const auto d = describe(w, st);
        CHECK(describe(w, staircase_from(w, d)) == d);
    }
    auto st = staircases(w, 2).back();
    st.hor(0, 1) = hor(w, "*>12");
    CHECK(check_staircase(w, st).has_value());
}

TEST_CASE("P of the edge graph") {
    const auto x = build_XG(edge_graph(), 3);
    const auto p = p_construction(x);
    CHECK(p.objects().size() == 5);
    CHECK(p.hor().morphisms().size() == 13);
    CHECK(p.ver().morphisms().size() == 13);
    CHECK(p.squares().size() == 25);
    const auto report = validate_double_category(p);
    CHECK(report.ok());
    CHECK(report.grids_checked > 0);
    CHECK(check_stable(p).ok);
    CHECK(check_pointed(p).ok);
    REQUIRE(p.point().has_value());
    CHECK(*p.point() == x.degeneracy(0, 0, 0));
}

TEST_CASE("P of a partial monoid nerve") {
    const auto m = square_zero_partial_monoid();
    const auto x = nerve_partial_monoid(m, 3);
    const auto p = p_construction(x);
    CHECK(validate_double_category(p).ok());
    CHECK(check_pointed(p).ok);
    // (a, b) is a >-> a.b horizontally and a.b ->> b vertically
    const auto ax = *p.hor().find_morphism(Descriptor::array({"1", "x"}).dump());
    CHECK(p.objects()[p.hor().morphisms()[ax].source] == Descriptor::array({"1"}).dump());
    CHECK(p.objects()[p.hor().morphisms()[ax].target] == Descriptor::array({"x"}).dump());
    const auto xv = *p.ver().find_morphism(Descriptor::array({"x", "1"}).dump());
    CHECK(p.objects()[p.ver().morphisms()[xv].source] == Descriptor::array({"x"}).dump());
    CHECK(p.objects()[p.ver().morphisms()[xv].target] == Descriptor::array({"1"}).dump());
    const auto s = s_construction(p, 2);
    CHECK(s.level_size(2) == x.level_size(2));
}

TEST_CASE("P rejects non-2-Segal input and names the bijection") {
    try {
        p_construction(simplex_boundary(3, 3));
        FAIL("expected a precondition failure");
    } catch (const PreconditionError& e) {
        CHECK(std::string(e.what()).find("(d_3,d_1)") != std::string::npos);
    }
    CHECK_THROWS_AS(p_construction(build_XG(edge_graph(), 2)), PreconditionError);
}

TEST_CASE("unit comparison") {
    for (const auto& x : {build_XG(edge_graph(), 4), build_XT(two_vertex_tree(), 4),
                          nerve_partial_monoid(square_zero_partial_monoid(), 4)}) {
        const auto u = unit_comparison(x);
        CHECK(u.report.ok);
        CHECK(u.report.reason.empty());
    }
    const auto x = build_XG(edge_graph(), 3);
    const auto u = unit_comparison(x);
    CHECK(u.s_of_p.level_size(2) == 13);
    CHECK(u.map[1].size() == 5);
    CHECK_THROWS_AS(unit_comparison(standard_simplex(1, 3)), PreconditionError);
}

TEST_CASE("counit comparison") {
    CHECK(counit_comparison(w2_double_category()).ok());
    CHECK(counit_comparison(trivial_double_category()).ok());
    const auto c = counit_comparison(p_construction(build_XG(edge_graph(), 3)));
    CHECK(c.ok());
    CHECK(c.maps.squares.size() == 25);
}

TEST_CASE("double isomorphism check catches a wrong map") {
    const auto w = w2_double_category();
    auto c = counit_comparison(w);
    REQUIRE(c.ok());
    std::swap(c.maps.squares[0], c.maps.squares[1]);
    CHECK(check_double_isomorphism(w, c.p_of_s, c.maps).has_value());
}

TEST_CASE("double category JSON") {
    const auto w = w2_double_category();
    const auto j = to_json(w);
    const auto back = double_category_from_json(j);
    CHECK(to_json(back) == j);
    CHECK(validate_double_category(back).ok());
    CHECK_THROWS_AS(double_category_from_json(nlohmann::json::parse(R"({"objects":["*"]})")), InputError);
    auto dangling = j;
    dangling["squares"][0]["top"] = "nope";
    CHECK_THROWS_AS(double_category_from_json(dangling), InputError);
}

}
