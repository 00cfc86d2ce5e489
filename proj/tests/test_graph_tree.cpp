#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "segal/graph.hpp"
#include "segal/tree.hpp"

using namespace segal;

namespace {

Descriptor gdesc(std::vector<std::string> v, std::vector<std::string> e, std::vector<int> b) {
    return {{"v", v}, {"e", e.empty() ? Descriptor::array() : Descriptor(e)}, {"b", b}};
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("level sizes match the subgraph count") {
    struct Case {
        Multigraph g;
        int vertices;
        std::vector<std::pair<int, int>> edges;
    };
    const std::vector<Case> cases = {
        {edge_graph(), 2, {{0, 1}}},
        {loop_graph(), 1, {{0, 0}}},
        {parallel_edges_graph(2), 2, {{0, 1}, {0, 1}}},
        {path_graph(3), 3, {{0, 1}, {1, 2}}},
        {triangle_graph(), 3, {{0, 1}, {1, 2}, {0, 2}}},
    };
    for (const auto& c : cases) {
        const auto k = build_XG(c.g, 4);
        CHECK(validate(k).ok());
        for (int n = 0; n <= 4; ++n)
            CHECK(k.level_size(n) == oracle::graph_level_size(c.vertices, c.edges, n));
    }
    const auto edge = build_XG(edge_graph(), 3);
    CHECK(edge.level_size(1) == 5);
    CHECK(edge.level_size(2) == 13);
    CHECK(edge.level_size(3) == 25);
    CHECK(build_XG(loop_graph(), 1).level_size(1) == 3);
}

TEST_CASE("outer faces drop a block, inner faces merge two") {
    const auto g = edge_graph();
    const auto k = build_XG(g, 2);
    const auto s = k.index_of(2, gdesc({"a", "b"}, {"e"}, {1, 2}));
    CHECK(k.descriptor(1, k.face(2, 0, s)) == gdesc({"b"}, {}, {1}));
    CHECK(k.descriptor(1, k.face(2, 2, s)) == gdesc({"a"}, {}, {1}));
    CHECK(k.descriptor(1, k.face(2, 1, s)) == gdesc({"a", "b"}, {"e"}, {1, 1}));
    const auto t = k.index_of(1, gdesc({"a", "b"}, {"e"}, {1, 1}));
    CHECK(k.descriptor(2, k.degeneracy(1, 0, t)) == gdesc({"a", "b"}, {"e"}, {2, 2}));
    CHECK(k.descriptor(2, k.degeneracy(1, 1, t)) == gdesc({"a", "b"}, {"e"}, {1, 1}));
}

TEST_CASE("loops and parallel edges keep their identity") {
    const auto k = build_XG(loop_graph(), 2);
    CHECK(k.find(1, gdesc({"a"}, {"l"}, {1})).has_value());
    CHECK(k.find(1, gdesc({"a"}, {}, {1})).has_value());
    const auto p = build_XG(parallel_edges_graph(3), 1);
    CHECK(p.level_size(1) == 1 + 2 + 8);
}

TEST_CASE("descriptor round trip and JSON") {
    const auto g = triangle_graph();
    const auto k = build_XG(g, 2);
    for (std::size_t s = 0; s < k.level_size(2); ++s)
        CHECK(describe(g, graph_simplex_from(g, k.descriptor(2, s))) == k.descriptor(2, s));
    const auto j = to_json(g);
    CHECK(to_json(multigraph_from_json(j)) == j);
    CHECK_THROWS_AS(multigraph_from_json(nlohmann::json::parse(R"({"vertices":["a"],"edges":[{"id":"e","ends":["a","z"]}]})")),
                    InputError);
    CHECK_THROWS_AS(multigraph_from_json(nlohmann::json::parse(R"({"vertices":["a","a"]})")), InputError);
    CHECK_THROWS_AS(graph_simplex_from(g, gdesc({"q"}, {}, {1})), InputError);
}

}

TEST_SUITE("tree") {

TEST_CASE("admissible subforests") {
    const auto t = two_vertex_tree();
    const auto f = admissible_subforests(t);
    CHECK(f.size() == 4);
    CHECK(f.back().vertices.size() == 2);
    const auto cherry = admissible_subforests(cherry_tree());
    CHECK(cherry.size() == 8);
    const auto path = admissible_subforests(path_tree());
    // {a,c} is not of the form L \ L'.
    CHECK(path.size() == 7);
}

TEST_CASE("level sizes match a brute-force count") {
    struct Case {
        RootedTree t;
        std::vector<int> parent;
    };
    // vertices sorted a, b, c
    const std::vector<Case> cases = {
        {two_vertex_tree(), {-1, 0}},
        {path_tree(), {-1, 0, 1}},
        {cherry_tree(), {-1, 0, 0}},
    };
    for (const auto& c : cases) {
        const auto k = build_XT(c.t, 4);
        CHECK(validate(k).ok());
        for (int n = 0; n <= 4; ++n)
            CHECK(k.level_size(n) == oracle::tree_level_size(c.parent, n));
    }
    CHECK(build_XT(two_vertex_tree(), 2).level_size(1) == 4);
}

TEST_CASE("X^T embeds in X^G of the underlying graph") {
    for (const auto& t : {two_vertex_tree(), path_tree(), cherry_tree()}) {
        const auto xt = build_XT(t, 3);
        const auto xg = build_XG(underlying_graph(t), 3);
        LevelMap map(4);
        for (int n = 0; n <= 3; ++n)
            for (std::size_t s = 0; s < xt.level_size(n); ++s) {
                const auto image = xg.find(n, tree_to_graph_descriptor(t, xt.descriptor(n, s)));
                REQUIRE(image.has_value());
                map[n].push_back(*image);
            }
        for (int n = 1; n <= 3; ++n)
            for (std::size_t s = 0; s < xt.level_size(n); ++s)
                for (int i = 0; i <= n; ++i)
                    CHECK(map[n - 1][xt.face(n, i, s)] == xg.face(n, i, map[n][s]));
        for (int n = 0; n <= 3; ++n) {
            std::set<std::size_t> distinct(map[n].begin(), map[n].end());
            CHECK(distinct.size() == map[n].size());
        }
    }
}

TEST_CASE("tree faces respect the root side") {
    const auto t = two_vertex_tree();
    const auto k = build_XT(t, 2);
    CHECK(k.find(2, Descriptor{{"v", {"a", "b"}}, {"b", {1, 2}}}).has_value());
    CHECK_FALSE(k.find(2, Descriptor{{"v", {"a", "b"}}, {"b", {2, 1}}}).has_value());
}

TEST_CASE("tree JSON") {
    const auto t = cherry_tree();
    const auto j = to_json(t);
    CHECK(to_json(rooted_tree_from_json(j)) == j);
    CHECK_THROWS_AS(rooted_tree_from_json(nlohmann::json::parse(R"({"vertices":["a","b"],"root":"a","parent":{}})")),
                    InputError);
    CHECK_THROWS_AS(
        rooted_tree_from_json(nlohmann::json::parse(R"({"vertices":["a","b"],"root":"a","parent":{"b":"b"}})")),
        InputError);
}

}
