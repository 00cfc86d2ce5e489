#include "segal/tree.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "block_faces.hpp"

namespace segal {

RootedTree::RootedTree(std::vector<std::string> vertices, const std::string& root,
                       const std::vector<std::pair<std::string, std::string>>& child_parent)
    : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (vertices_.empty())
        throw InputError("a rooted tree needs at least its root");
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw InputError("duplicate vertex label in tree");
    root_ = vertex_index(root);
    parent_.assign(vertices_.size(), std::nullopt);
    for (const auto& [child, parent] : child_parent) {
        const auto c = vertex_index(child);
        if (c == root_)
            throw InputError("the root cannot have a parent");
        if (parent_[c])
            throw InputError("vertex " + child + " has two parents");
        parent_[c] = vertex_index(parent);
    }
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
        std::size_t cur = v;
        std::size_t steps = 0;
        while (cur != root_) {
            if (!parent_[cur] || ++steps > vertices_.size())
                throw InputError("vertex " + vertices_[v] + " is not connected to the root");
            cur = *parent_[cur];
        }
    }
}

std::size_t RootedTree::vertex_index(const std::string& label) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), label);
    if (it == vertices_.end() || *it != label)
        throw InputError("unknown vertex " + label);
    return static_cast<std::size_t>(it - vertices_.begin());
}

bool is_lower_subforest(const RootedTree& t, const Forest& forest, const std::vector<std::size_t>& subset) {
    std::vector<bool> in_forest(t.vertices().size(), false);
    std::vector<bool> in_subset(t.vertices().size(), false);
    for (auto v : forest.vertices)
        in_forest[v] = true;
    for (auto v : subset) {
        if (!in_forest[v])
            return false;
        in_subset[v] = true;
    }
    for (auto v : subset)
        if (const auto& p = t.parent(v); p && in_forest[*p] && !in_subset[*p])
            return false;
    return true;
}

std::vector<std::vector<std::size_t>> lower_subtrees(const RootedTree& t) {
    const auto nv = t.vertices().size();
    if (nv > 20)
        throw PreconditionError("tree too large for lower subtree enumeration");
    Forest whole;
    for (std::size_t v = 0; v < nv; ++v)
        whole.vertices.push_back(v);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << nv); ++mask) {
        std::vector<std::size_t> subset;
        for (std::size_t v = 0; v < nv; ++v)
            if (mask >> v & 1U)
                subset.push_back(v);
        if (is_lower_subforest(t, whole, subset))
            out.push_back(std::move(subset));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::make_pair(a.size(), a) < std::make_pair(b.size(), b);
    });
    return out;
}

std::vector<Forest> admissible_subforests(const RootedTree& t) {
    const auto lowers = lower_subtrees(t);
    std::set<std::pair<std::size_t, std::vector<std::size_t>>> found;
    for (const auto& big : lowers)
        for (const auto& small : lowers) {
            if (!std::includes(big.begin(), big.end(), small.begin(), small.end()))
                continue;
            std::vector<std::size_t> diff;
            std::set_difference(big.begin(), big.end(), small.begin(), small.end(), std::back_inserter(diff));
            found.emplace(diff.size(), std::move(diff));
        }
    std::vector<Forest> out;
    for (const auto& entry : found)
        out.push_back({entry.second});
    return out;
}

Descriptor describe(const RootedTree& t, const TreeSimplex& s) {
    Descriptor v = Descriptor::array();
    for (auto x : s.forest.vertices)
        v.push_back(t.vertices()[x]);
    return {{"v", v}, {"b", s.blocks}};
}

TreeSimplex tree_simplex_from(const RootedTree& t, const Descriptor& d) {
    try {
        TreeSimplex s;
        for (const auto& label : d.at("v"))
            s.forest.vertices.push_back(t.vertex_index(label.get<std::string>()));
        s.blocks = d.at("b").get<std::vector<int>>();
        if (s.blocks.size() != s.forest.vertices.size())
            throw InputError("block list does not match vertex list");
        s.level = s.blocks.empty() ? 0 : *std::max_element(s.blocks.begin(), s.blocks.end());
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed tree simplex: ") + e.what());
    }
}

namespace {

struct TreeModel {
    using Simplex = TreeSimplex;

    const RootedTree& t;
    std::vector<Forest> forests;

    // Chain entries must be parent-closed in the forest: a parent inside the
    // forest sits in an earlier or equal block.
    bool monotone(const Forest& f, const std::vector<int>& blocks) const {
        for (std::size_t k = 0; k < f.vertices.size(); ++k) {
            const auto& p = t.parent(f.vertices[k]);
            if (!p)
                continue;
            auto it = std::lower_bound(f.vertices.begin(), f.vertices.end(), *p);
            if (it != f.vertices.end() && *it == *p &&
                blocks[static_cast<std::size_t>(it - f.vertices.begin())] > blocks[k])
                return false;
        }
        return true;
    }

    std::vector<TreeSimplex> simplices(int n) const {
        std::vector<TreeSimplex> out;
        for (const auto& f : forests)
            detail::for_each_assignment(
                f.vertices.size(), n, [&](const std::vector<int>& b) { return monotone(f, b); },
                [&](const std::vector<int>& b) { out.push_back({f, b, n}); });
        return out;
    }

    TreeSimplex face(int n, int i, const TreeSimplex& s) const {
        auto f = detail::block_face(n, i, s.blocks);
        TreeSimplex out{{}, std::move(f.blocks), n - 1};
        for (std::size_t k = 0; k < s.forest.vertices.size(); ++k)
            if (f.kept[k])
                out.forest.vertices.push_back(s.forest.vertices[k]);
        return out;
    }

    TreeSimplex degeneracy(int n, int i, const TreeSimplex& s) const {
        return {s.forest, detail::block_degeneracy(i, s.blocks), n + 1};
    }

    Descriptor describe(const TreeSimplex& s) const { return segal::describe(t, s); }
};

}  // namespace

TruncatedSimplicialSet build_XT(const RootedTree& t, int truncation) {
    TreeModel model{t, admissible_subforests(t)};
    return build_simplicial_set(model, truncation, "X^T");
}

Multigraph underlying_graph(const RootedTree& t) {
    std::vector<std::pair<std::string, std::pair<std::string, std::string>>> edges;
    for (std::size_t v = 0; v < t.vertices().size(); ++v)
        if (const auto& p = t.parent(v))
            edges.push_back({t.vertices()[*p] + "-" + t.vertices()[v], {t.vertices()[*p], t.vertices()[v]}});
    return Multigraph(t.vertices(), edges);
}

Descriptor tree_to_graph_descriptor(const RootedTree& t, const Descriptor& d) {
    const auto s = tree_simplex_from(t, d);
    std::vector<bool> inside(t.vertices().size(), false);
    for (auto v : s.forest.vertices)
        inside[v] = true;
    std::vector<std::string> edges;
    for (auto v : s.forest.vertices)
        if (const auto& p = t.parent(v); p && inside[*p])
            edges.push_back(t.vertices()[*p] + "-" + t.vertices()[v]);
    std::sort(edges.begin(), edges.end());
    return {{"v", d.at("v")}, {"e", edges}, {"b", d.at("b")}};
}

RootedTree rooted_tree_from_json(const nlohmann::json& j) {
    try {
        std::vector<std::pair<std::string, std::string>> links;
        const auto parents = j.value("parent", nlohmann::json::object());
        for (const auto& [child, parent] : parents.items())
            links.emplace_back(child, parent.get<std::string>());
        return RootedTree(j.at("vertices").get<std::vector<std::string>>(), j.at("root").get<std::string>(), links);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed tree JSON: ") + e.what());
    }
}

nlohmann::json to_json(const RootedTree& t) {
    nlohmann::json parent = nlohmann::json::object();
    for (std::size_t v = 0; v < t.vertices().size(); ++v)
        if (const auto& p = t.parent(v))
            parent[t.vertices()[v]] = t.vertices()[*p];
    return {{"vertices", t.vertices()}, {"root", t.vertices()[t.root()]}, {"parent", parent}};
}

RootedTree two_vertex_tree() { return RootedTree({"a", "b"}, "a", {{"b", "a"}}); }

RootedTree path_tree() { return RootedTree({"a", "b", "c"}, "a", {{"b", "a"}, {"c", "b"}}); }

RootedTree cherry_tree() { return RootedTree({"a", "b", "c"}, "a", {{"b", "a"}, {"c", "a"}}); }

}  // namespace segal
