#include "segal/graph.hpp"

#include <algorithm>
#include <set>

#include "block_faces.hpp"

namespace segal {

Multigraph::Multigraph(std::vector<std::string> vertices,
                       const std::vector<std::pair<std::string, std::pair<std::string, std::string>>>& edges)
    : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw InputError("duplicate vertex label in graph");
    std::set<std::string> ids;
    for (const auto& [id, ends] : edges) {
        if (!ids.insert(id).second)
            throw InputError("duplicate edge id " + id);
        auto a = vertex_index(ends.first);
        auto b = vertex_index(ends.second);
        edges_.push_back({id, std::min(a, b), std::max(a, b)});
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& x, const Edge& y) { return x.id < y.id; });
}

std::size_t Multigraph::vertex_index(const std::string& label) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), label);
    if (it == vertices_.end() || *it != label)
        throw InputError("unknown vertex " + label);
    return static_cast<std::size_t>(it - vertices_.begin());
}

std::vector<Subgraph> subgraphs(const Multigraph& g) {
    const auto nv = g.vertices().size();
    if (nv > 20)
        throw PreconditionError("graph too large for subgraph enumeration");
    std::vector<Subgraph> out;
    for (std::size_t size = 0; size <= nv; ++size) {
        // vertex subsets of this size in lexicographic order
        std::vector<bool> pick(nv, false);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
        do {
            Subgraph base;
            for (std::size_t v = 0; v < nv; ++v)
                if (pick[v])
                    base.vertices.push_back(v);
            std::vector<std::size_t> internal;
            for (std::size_t e = 0; e < g.edges().size(); ++e)
                if (pick[g.edges()[e].a] && pick[g.edges()[e].b])
                    internal.push_back(e);
            const std::size_t subsets = std::size_t{1} << internal.size();
            std::vector<Subgraph> batch;
            for (std::size_t mask = 0; mask < subsets; ++mask) {
                Subgraph h{base.vertices, {}};
                for (std::size_t k = 0; k < internal.size(); ++k)
                    if (mask >> k & 1U)
                        h.edges.push_back(internal[k]);
                batch.push_back(std::move(h));
            }
            std::sort(batch.begin(), batch.end(), [](const Subgraph& x, const Subgraph& y) {
                return std::make_pair(x.edges.size(), x.edges) < std::make_pair(y.edges.size(), y.edges);
            });
            out.insert(out.end(), batch.begin(), batch.end());
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return out;
}

Descriptor describe(const Multigraph& g, const GraphSimplex& s) {
    Descriptor v = Descriptor::array();
    Descriptor e = Descriptor::array();
    for (auto x : s.graph.vertices)
        v.push_back(g.vertices()[x]);
    for (auto x : s.graph.edges)
        e.push_back(g.edges()[x].id);
    return {{"v", v}, {"e", e}, {"b", s.blocks}};
}

Descriptor describe(const Multigraph& g, const Subgraph& h) {
    return describe(g, GraphSimplex{h, std::vector<int>(h.vertices.size(), 1), 1});
}

GraphSimplex graph_simplex_from(const Multigraph& g, const Descriptor& d) {
    try {
        GraphSimplex s;
        for (const auto& label : d.at("v"))
            s.graph.vertices.push_back(g.vertex_index(label.get<std::string>()));
        for (const auto& id : d.at("e")) {
            auto it = std::find_if(g.edges().begin(), g.edges().end(),
                                   [&](const Multigraph::Edge& e) { return e.id == id.get<std::string>(); });
            if (it == g.edges().end())
                throw InputError("unknown edge " + id.dump());
            s.graph.edges.push_back(static_cast<std::size_t>(it - g.edges().begin()));
        }
        s.blocks = d.at("b").get<std::vector<int>>();
        if (s.blocks.size() != s.graph.vertices.size())
            throw InputError("block list does not match vertex list");
        s.level = s.blocks.empty() ? 0 : *std::max_element(s.blocks.begin(), s.blocks.end());
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed graph simplex: ") + e.what());
    }
}

namespace {

struct GraphModel {
    using Simplex = GraphSimplex;

    const Multigraph& g;
    std::vector<Subgraph> subs;

    std::vector<GraphSimplex> simplices(int n) const {
        std::vector<GraphSimplex> out;
        for (const auto& h : subs)
            detail::for_each_assignment(
                h.vertices.size(), n, [](const std::vector<int>&) { return true; },
                [&](const std::vector<int>& b) { out.push_back({h, b, n}); });
        return out;
    }

    GraphSimplex face(int n, int i, const GraphSimplex& s) const {
        auto f = detail::block_face(n, i, s.blocks);
        GraphSimplex out{{}, std::move(f.blocks), n - 1};
        std::vector<bool> keep_vertex(g.vertices().size(), false);
        for (std::size_t k = 0; k < s.graph.vertices.size(); ++k)
            if (f.kept[k]) {
                out.graph.vertices.push_back(s.graph.vertices[k]);
                keep_vertex[s.graph.vertices[k]] = true;
            }
        for (auto e : s.graph.edges)
            if (keep_vertex[g.edges()[e].a] && keep_vertex[g.edges()[e].b])
                out.graph.edges.push_back(e);
        return out;
    }

    GraphSimplex degeneracy(int n, int i, const GraphSimplex& s) const {
        return {s.graph, detail::block_degeneracy(i, s.blocks), n + 1};
    }

    Descriptor describe(const GraphSimplex& s) const { return segal::describe(g, s); }
};

}  // namespace

TruncatedSimplicialSet build_XG(const Multigraph& g, int truncation) {
    GraphModel model{g, subgraphs(g)};
    return build_simplicial_set(model, truncation, "X^G");
}

Multigraph multigraph_from_json(const nlohmann::json& j) {
    try {
        auto vertices = j.at("vertices").get<std::vector<std::string>>();
        std::vector<std::pair<std::string, std::pair<std::string, std::string>>> edges;
        for (const auto& e : j.value("edges", nlohmann::json::array())) {
            const auto& ends = e.at("ends");
            if (!ends.is_array() || ends.size() != 2)
                throw InputError("edge needs exactly two ends");
            edges.push_back({e.at("id").get<std::string>(), {ends[0].get<std::string>(), ends[1].get<std::string>()}});
        }
        return Multigraph(std::move(vertices), edges);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed graph JSON: ") + e.what());
    }
}

nlohmann::json to_json(const Multigraph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : g.edges())
        edges.push_back({{"id", e.id}, {"ends", {g.vertices()[e.a], g.vertices()[e.b]}}});
    return {{"vertices", g.vertices()}, {"edges", edges}};
}

Multigraph edge_graph() { return Multigraph({"a", "b"}, {{"e", {"a", "b"}}}); }

Multigraph loop_graph() { return Multigraph({"a"}, {{"l", {"a", "a"}}}); }

Multigraph parallel_edges_graph(int count) {
    std::vector<std::pair<std::string, std::pair<std::string, std::string>>> edges;
    for (int k = 1; k <= count; ++k)
        edges.push_back({"e" + std::to_string(k), {"a", "b"}});
    return Multigraph({"a", "b"}, edges);
}

Multigraph path_graph(int vertex_count) {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::pair<std::string, std::string>>> edges;
    for (int k = 0; k < vertex_count; ++k) {
        vertices.push_back(std::string(1, static_cast<char>('a' + k)));
        if (k > 0)
            edges.push_back({vertices[static_cast<std::size_t>(k - 1)] + vertices.back(),
                             {vertices[static_cast<std::size_t>(k - 1)], vertices.back()}});
    }
    return Multigraph(vertices, edges);
}

Multigraph triangle_graph() {
    return Multigraph({"a", "b", "c"}, {{"ab", {"a", "b"}}, {"bc", {"b", "c"}}, {"ac", {"a", "c"}}});
}

}  // namespace segal
