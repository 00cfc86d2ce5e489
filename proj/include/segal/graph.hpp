#pragma once

#include <string>
#include <vector>

#include "segal/simplicial.hpp"

namespace segal {

/// A finite multigraph. Loops and parallel edges are allowed; edges are told
/// apart by id. Vertices and edges are kept sorted by label / id.
class Multigraph {
public:
    struct Edge {
        std::string id;
        std::size_t a;
        std::size_t b;
    };

    Multigraph() = default;
    /// Throws InputError on duplicate labels or dangling endpoints.
    Multigraph(std::vector<std::string> vertices,
               const std::vector<std::pair<std::string, std::pair<std::string, std::string>>>& edges);

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t vertex_index(const std::string& label) const;

private:
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
};

/// Vertex and edge indices into the ambient graph, both sorted. Every edge
/// has both endpoints among the vertices.
struct Subgraph {
    std::vector<std::size_t> vertices;
    std::vector<std::size_t> edges;

    bool operator==(const Subgraph&) const = default;
};

/// An n-simplex (H; S_1, ..., S_n): blocks[k] is the 1-based block of
/// H.vertices[k].
struct GraphSimplex {
    Subgraph graph;
    std::vector<int> blocks;
    int level = 0;
};

/// All subgraphs: every vertex subset with every subset of its internal
/// edges. Ordered by vertex count, then lexicographically.
std::vector<Subgraph> subgraphs(const Multigraph& g);

TruncatedSimplicialSet build_XG(const Multigraph& g, int truncation);

/// Descriptor of a simplex of X^G: {"v": labels, "e": edge ids, "b": blocks}.
Descriptor describe(const Multigraph& g, const GraphSimplex& s);
/// Inverse of describe; throws InputError on foreign labels.
GraphSimplex graph_simplex_from(const Multigraph& g, const Descriptor& d);

/// Descriptor of the subgraph viewed as a 1-simplex.
Descriptor describe(const Multigraph& g, const Subgraph& h);

Multigraph multigraph_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Multigraph& g);

/// The single edge a-b, the loop at a, and friends used throughout the tests.
Multigraph edge_graph();
Multigraph loop_graph();
Multigraph parallel_edges_graph(int count);
Multigraph path_graph(int vertex_count);
Multigraph triangle_graph();

}  // namespace segal
