#include <doctest.h>

#include "oracles.hpp"
#include "segal/nerve.hpp"
#include "segal/segal_check.hpp"

using namespace segal;

namespace {

std::optional<std::string> roundtrip(const FiniteCategory& c) {
    const auto d = category_from_1segal(nerve_category(c, 3));
    std::vector<std::size_t> objects, morphisms;
    for (const auto& x : c.objects()) {
        const auto found = d.find_object(Descriptor{{"object", x}}.dump());
        if (!found)
            return "object " + x + " lost";
        objects.push_back(*found);
    }
    for (const auto& f : c.morphisms()) {
        const auto found = d.find_morphism(Descriptor::array({f.id}).dump());
        if (!found)
            return "morphism " + f.id + " lost";
        morphisms.push_back(*found);
    }
    return check_category_isomorphism(c, d, objects, morphisms);
}

}  // namespace

TEST_SUITE("nerve") {

TEST_CASE("fixture categories are categories") {
    CHECK(ordinal_category(3).problems().empty());
    CHECK(cyclic_group_category(3).problems().empty());
    CHECK(v_poset_category().problems().empty());
    CHECK(cyclic_monoid(3).problems().empty());
    CHECK(square_zero_partial_monoid().problems().empty());
}

TEST_CASE("nerve level sizes") {
    for (int k = 1; k <= 3; ++k) {
        const auto n = nerve_category(cyclic_group_category(k), 4);
        for (int lvl = 0; lvl <= 4; ++lvl)
            CHECK(n.level_size(lvl) == oracle::power(static_cast<std::uint64_t>(k), lvl));
        CHECK(validate(n).ok());
    }
    // chains in [2] of length n are monotone maps [n] -> [2]
    const auto o = nerve_category(ordinal_category(2), 3);
    for (int lvl = 0; lvl <= 3; ++lvl)
        CHECK(o.level_size(lvl) == oracle::binomial(lvl + 3, lvl + 1));
    const auto pm = nerve_partial_monoid(square_zero_partial_monoid(), 4);
    for (int lvl = 0; lvl <= 4; ++lvl)
        CHECK(pm.level_size(lvl) == static_cast<std::size_t>(lvl + 1));
    CHECK(validate(pm).ok());
}

TEST_CASE("nerve of [n] is the n-simplex, nerve of the trivial monoid a point") {
    for (int n = 0; n <= 3; ++n)
        CHECK(levelwise_isomorphic(nerve_category(ordinal_category(n), 3), standard_simplex(n, 3)).ok);
    const auto one = nerve_partial_monoid(cyclic_monoid(1), 3);
    for (int lvl = 0; lvl <= 3; ++lvl)
        CHECK(one.level_size(lvl) == 1);
    const auto arrow = category_from_1segal(standard_simplex(1, 2));
    CHECK(arrow.objects().size() == 2);
    CHECK(arrow.morphisms().size() == 3);
}

TEST_CASE("category from a 1-Segal set round trips") {
    CHECK_FALSE(roundtrip(v_poset_category()).has_value());
    CHECK_FALSE(roundtrip(cyclic_group_category(2)).has_value());
    CHECK_FALSE(roundtrip(ordinal_category(2)).has_value());
    CHECK_THROWS_AS(category_from_1segal(nerve_partial_monoid(square_zero_partial_monoid(), 3)), PreconditionError);
}

TEST_CASE("category isomorphism check catches a bad map") {
    const auto c = cyclic_group_category(3);
    std::vector<std::size_t> objects{0};
    std::vector<std::size_t> swap{0, 2, 1};
    CHECK_FALSE(check_category_isomorphism(c, c, objects, swap).has_value());
    std::vector<std::size_t> broken{1, 0, 2};
    CHECK(check_category_isomorphism(c, c, objects, broken).has_value());
}

TEST_CASE("partial monoid laws") {
    PartialMonoid bad({"1", "x", "y"}, "1");
    bad.set_product("1", "1", "1");
    bad.set_product("1", "x", "x");
    bad.set_product("x", "1", "x");
    bad.set_product("1", "y", "y");
    bad.set_product("y", "1", "y");
    bad.set_product("x", "y", "x");
    // (x.y).y is defined while y.y is not
    CHECK_FALSE(bad.problems().empty());
    CHECK_THROWS_AS(PartialMonoid({"1", "1"}, "1"), InputError);
    CHECK_THROWS_AS(PartialMonoid({"1"}, "u"), InputError);
}

TEST_CASE("partial monoid JSON") {
    const auto m = square_zero_partial_monoid();
    const auto j = to_json(m);
    CHECK(to_json(partial_monoid_from_json(j)) == j);
    CHECK_FALSE(partial_monoid_from_json(j).product(1, 1).has_value());
    CHECK_THROWS_AS(partial_monoid_from_json(nlohmann::json::parse(R"({"elements":["1"]})")), InputError);
}

TEST_CASE("nerves of monoids are 2-Segal, partial ones are not 1-Segal") {
    CHECK(segal2_check(nerve_partial_monoid(cyclic_monoid(3), 4)).passed());
    CHECK(segal2_check(nerve_partial_monoid(square_zero_partial_monoid(), 4)).passed());
    CHECK(segal1_check(nerve_partial_monoid(cyclic_monoid(2), 4)).passed());
    CHECK_FALSE(segal1_check(nerve_partial_monoid(square_zero_partial_monoid(), 4)).passed());
}

}
