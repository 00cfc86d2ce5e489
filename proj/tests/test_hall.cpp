#include <doctest.h>

#include "oracles.hpp"
#include "segal/graph.hpp"
#include "segal/hall.hpp"
#include "segal/nerve.hpp"
#include "segal/tree.hpp"

using namespace segal;

namespace {

std::size_t basis(const HallAlgebra& a, const Descriptor& d) {
    for (std::size_t x = 0; x < a.dimension(); ++x)
        if (a.basis()[x] == d)
            return x;
    FAIL("basis element missing: " << d.dump());
    return 0;
}

Descriptor g1(std::vector<std::string> v, std::vector<std::string> e) {
    std::vector<int> b(v.size(), 1);
    return {{"v", v}, {"e", e.empty() ? Descriptor::array() : Descriptor(e)}, {"b", b}};
}

Descriptor t1(std::vector<std::string> v) {
    std::vector<int> b(v.size(), 1);
    return {{"v", v}, {"b", b}};
}

}  // namespace

TEST_SUITE("hall") {

TEST_CASE("edge graph") {
    const auto a = hall_algebra(build_XG(edge_graph(), 2));
    CHECK(a.dimension() == 5);
    const auto x = basis(a, g1({"a"}, {}));
    const auto y = basis(a, g1({"b"}, {}));
    const auto disjoint = basis(a, g1({"a", "b"}, {}));
    const auto whole = basis(a, g1({"a", "b"}, {"e"}));
    const HallElement expected{{disjoint, 1}, {whole, 1}};
    CHECK(a.product(x, y) == expected);
    CHECK(a.product(y, x) == expected);
    CHECK(a.unit() == basis(a, g1({}, {})));
    CHECK(check_associative(a).holds);
    CHECK(check_unital(a).holds);
    CHECK(check_commutative(a).holds);
}

TEST_CASE("squares vanish and few products survive") {
    const auto count = [](const HallAlgebra& a) {
        std::size_t n = 0;
        for (std::size_t x = 0; x < a.dimension(); ++x)
            for (std::size_t y = 0; y < a.dimension(); ++y)
                if (x != a.unit() && y != a.unit() && !a.product(x, y).empty())
                    ++n;
        return n;
    };
    const auto g = hall_algebra(build_XG(edge_graph(), 2));
    const auto x = basis(g, g1({"a"}, {}));
    CHECK(g.product(x, x).empty());
    CHECK(count(g) == 2);
    CHECK(count(hall_algebra(build_XT(two_vertex_tree(), 2))) == 1);
}

TEST_CASE("parallel edges give 2^n terms") {
    for (int n = 1; n <= 3; ++n) {
        const auto a = hall_algebra(build_XG(parallel_edges_graph(n), 2));
        const auto p = a.product(basis(a, g1({"a"}, {})), basis(a, g1({"b"}, {})));
        CHECK(p.size() == oracle::power(2, n));
        for (const auto& [z, c] : p)
            CHECK(c == 1);
    }
}

TEST_CASE("loop graph has only unit products") {
    const auto a = hall_algebra(build_XG(loop_graph(), 2));
    CHECK(a.dimension() == 3);
    for (std::size_t x = 0; x < 3; ++x)
        for (std::size_t y = 0; y < 3; ++y)
            if (x != a.unit() && y != a.unit())
                CHECK(a.product(x, y).empty());
}

TEST_CASE("two-vertex tree is not commutative") {
    const auto a = hall_algebra(build_XT(two_vertex_tree(), 2));
    CHECK(a.dimension() == 4);
    const auto x = basis(a, t1({"a"}));
    const auto y = basis(a, t1({"b"}));
    const auto whole = basis(a, t1({"a", "b"}));
    CHECK(a.product(x, y) == HallElement{{whole, 1}});
    CHECK(a.product(y, x).empty());
    const auto comm = check_commutative(a);
    CHECK_FALSE(comm.holds);
    REQUIRE(comm.witness.size() == 2);
    CHECK(a.basis()[comm.witness[0]] == t1({"a"}));
    CHECK(a.basis()[comm.witness[1]] == t1({"b"}));
    CHECK(check_associative(a).holds);
}

TEST_CASE("monoid nerve gives the monoid algebra") {
    const auto a = hall_algebra(nerve_partial_monoid(cyclic_monoid(3), 2));
    for (std::size_t x = 0; x < 3; ++x)
        for (std::size_t y = 0; y < 3; ++y) {
            const auto z = basis(a, Descriptor::array({std::to_string((x + y) % 3)}));
            CHECK(a.product(basis(a, Descriptor::array({std::to_string(x)})),
                            basis(a, Descriptor::array({std::to_string(y)}))) == HallElement{{z, 1}});
        }
    CHECK(check_commutative(a).holds);
}

TEST_CASE("preconditions") {
    CHECK_THROWS_AS(hall_algebra(standard_simplex(1, 2)), PreconditionError);
    CHECK_THROWS_AS(hall_algebra(build_XG(edge_graph(), 1)), PreconditionError);
    CHECK_THROWS_AS(parse_table_format("xml"), PreconditionError);
}

TEST_CASE("table export") {
    const auto a = hall_algebra(build_XG(edge_graph(), 2));
    const auto csv = export_table(a, TableFormat::csv);
    CHECK(csv.find("\"{a,b}+{a,b:e}\"") != std::string::npos);
    std::size_t lines = 0;
    for (char c : csv)
        lines += c == '\n';
    CHECK(lines == 6);
    const auto text = export_table(a, TableFormat::text);
    CHECK(text.find("{a} . {b} = {a,b}+{a,b:e}") != std::string::npos);
    const auto j = nlohmann::json::parse(export_table(a, TableFormat::json));
    CHECK(j["basis"].size() == 5);
    std::size_t nonzero = 0;
    for (std::size_t x = 0; x < 5; ++x)
        for (std::size_t y = 0; y < 5; ++y)
            nonzero += a.product(x, y).size();
    CHECK(j["constants"].size() == nonzero);
}

TEST_CASE("multiply is bilinear") {
    const auto a = hall_algebra(build_XG(path_graph(3), 2));
    HallElement u, v;
    for (std::size_t x = 0; x < a.dimension(); x += 2)
        u[x] = static_cast<int>(x) + 1;
    for (std::size_t y = 1; y < a.dimension(); y += 3)
        v[y] = 2;
    HallElement expected;
    for (const auto& [x, cx] : u)
        for (const auto& [y, cy] : v)
            for (const auto& [z, g] : a.product(x, y))
                expected[z] += cx * cy * g;
    std::erase_if(expected, [](const auto& e) { return e.second == 0; });
    CHECK(multiply(a, u, v) == expected);
}

}
