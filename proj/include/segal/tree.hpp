#pragma once

#include <optional>
#include <string>
#include <vector>

#include "segal/graph.hpp"
#include "segal/simplicial.hpp"

namespace segal {

/// A labelled rooted tree. Vertices are sorted by label.
class RootedTree {
public:
    /// Throws InputError unless parent links reach the root from every vertex.
    RootedTree(std::vector<std::string> vertices, const std::string& root,
               const std::vector<std::pair<std::string, std::string>>& child_parent);

    const std::vector<std::string>& vertices() const { return vertices_; }
    std::size_t root() const { return root_; }
    const std::optional<std::size_t>& parent(std::size_t v) const { return parent_.at(v); }
    std::size_t vertex_index(const std::string& label) const;

private:
    std::vector<std::string> vertices_;
    std::size_t root_ = 0;
    std::vector<std::optional<std::size_t>> parent_;
};

/// A subforest of T given by its (sorted) vertex set, edges induced from T.
struct Forest {
    std::vector<std::size_t> vertices;

    bool operator==(const Forest&) const = default;
    auto operator<=>(const Forest&) const = default;
};

/// Parent-closed inside the forest: a vertex's parent, when it lies in the
/// forest, lies in the subset too.
bool is_lower_subforest(const RootedTree& t, const Forest& forest, const std::vector<std::size_t>& subset);

/// All parent-closed vertex subsets of T (sorted index sets).
std::vector<std::vector<std::size_t>> lower_subtrees(const RootedTree& t);

/// { L \ L' : L' within L, both lower subtrees }, deduplicated, ordered by
/// size and then lexicographically (so T comes last).
std::vector<Forest> admissible_subforests(const RootedTree& t);

/// n-simplex of X^T: the chain M_0 within ... within M_n = V(H) stored as the
/// least k with v in M_k, per vertex of H.
struct TreeSimplex {
    Forest forest;
    std::vector<int> blocks;
    int level = 0;
};

TruncatedSimplicialSet build_XT(const RootedTree& t, int truncation);

/// {"v": labels, "b": blocks}.
Descriptor describe(const RootedTree& t, const TreeSimplex& s);
TreeSimplex tree_simplex_from(const RootedTree& t, const Descriptor& d);

/// The underlying graph; the edge to child c from its parent p has id "p-c".
Multigraph underlying_graph(const RootedTree& t);
/// Translates an X^T descriptor into the matching X^G descriptor.
Descriptor tree_to_graph_descriptor(const RootedTree& t, const Descriptor& d);

RootedTree rooted_tree_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RootedTree& t);

/// Root a with child b.
RootedTree two_vertex_tree();
/// a -> b -> c, rooted at a.
RootedTree path_tree();
/// Root a with children b and c.
RootedTree cherry_tree();

}  // namespace segal
