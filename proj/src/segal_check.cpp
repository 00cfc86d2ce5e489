#include "segal/segal_check.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

namespace segal {

namespace {

struct TupleHash {
    std::size_t operator()(const std::vector<std::size_t>& v) const noexcept {
        std::size_t h = v.size();
        for (auto x : v)
            h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

using ImageMap = std::unordered_map<std::vector<std::size_t>, std::size_t, TupleHash>;

void require_level(const TruncatedSimplicialSet& k, int n, int lowest) {
    if (n < lowest || n > k.truncation())
        throw PreconditionError("level " + std::to_string(n) + " out of range for Segal map");
}

// Triangle edge {a,b} with a<b of triangle (i,j,k) is its face d_f.
int face_for_edge(const std::array<int, 3>& tri, int a, int b) {
    if (a == tri[0] && b == tri[1])
        return 2;
    if (a == tri[1] && b == tri[2])
        return 0;
    return 1;
}

std::vector<std::pair<int, int>> triangle_edges(const std::array<int, 3>& t) {
    return {{t[0], t[1]}, {t[1], t[2]}, {t[0], t[2]}};
}

// Bijectivity test shared by both Segal conditions: images of K_n against a
// target set enumerated independently.
std::optional<SegalWitness> check_bijection(int n, std::size_t level_size,
                                            const std::function<std::vector<std::size_t>(std::size_t)>& image_of,
                                            const std::vector<std::vector<std::size_t>>& targets,
                                            std::size_t& gap_count) {
    ImageMap images;
    for (std::size_t s = 0; s < level_size; ++s) {
        auto img = image_of(s);
        auto [it, fresh] = images.emplace(img, s);
        if (!fresh)
            return SegalWitness{SegalWitness::Kind::non_injective, n, {it->second, s}, std::move(img), std::nullopt};
    }
    // Gaps are reported from the top of the enumeration, so the witness
    // involves the largest simplices available.
    std::optional<SegalWitness> witness;
    for (auto it = targets.rbegin(); it != targets.rend(); ++it) {
        if (images.contains(*it))
            continue;
        ++gap_count;
        if (!witness)
            witness = SegalWitness{SegalWitness::Kind::non_surjective, n, {}, *it, std::nullopt};
    }
    if (!witness && targets.size() != images.size()) {
        // Some image is not a compatible tuple; this cannot happen for a
        // simplicial set whose identities hold.
        throw InputError("Segal map leaves its fiber product at level " + std::to_string(n));
    }
    return witness;
}

}  // namespace

// ------------------------------------------------------------ triangulations

std::vector<Triangulation> enumerate_triangulations(int n) {
    if (n < 2)
        throw PreconditionError("triangulations need a polygon with at least 3 vertices");
    std::map<std::pair<int, int>, std::vector<std::vector<std::array<int, 3>>>> memo;
    std::function<const std::vector<std::vector<std::array<int, 3>>>&(int, int)> tri =
        [&](int lo, int hi) -> const std::vector<std::vector<std::array<int, 3>>>& {
        auto key = std::make_pair(lo, hi);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
        std::vector<std::vector<std::array<int, 3>>> out;
        if (hi - lo < 2) {
            out.emplace_back();
        } else {
            for (int k = lo + 1; k < hi; ++k) {
                const auto left = tri(lo, k);
                const auto right = tri(k, hi);
                for (const auto& l : left)
                    for (const auto& r : right) {
                        std::vector<std::array<int, 3>> t{{lo, k, hi}};
                        t.insert(t.end(), l.begin(), l.end());
                        t.insert(t.end(), r.begin(), r.end());
                        out.push_back(std::move(t));
                    }
            }
        }
        return memo[key] = std::move(out);
    };

    std::vector<Triangulation> result;
    for (auto triangles : tri(0, n)) {
        std::sort(triangles.begin(), triangles.end());
        std::set<std::pair<int, int>> diagonals;
        for (const auto& t : triangles)
            for (auto [a, b] : triangle_edges(t))
                if (b - a > 1 && !(a == 0 && b == n))
                    diagonals.emplace(a, b);
        result.push_back({n, std::move(triangles), {diagonals.begin(), diagonals.end()}});
    }
    std::sort(result.begin(), result.end(),
              [](const Triangulation& a, const Triangulation& b) { return a.triangles < b.triangles; });
    return result;
}

bool is_valid_triangulation(const Triangulation& t) {
    if (t.n < 2 || static_cast<int>(t.triangles.size()) != t.n - 1)
        return false;
    std::map<std::pair<int, int>, int> uses;
    for (const auto& tri : t.triangles) {
        if (!(0 <= tri[0] && tri[0] < tri[1] && tri[1] < tri[2] && tri[2] <= t.n))
            return false;
        for (auto e : triangle_edges(tri))
            ++uses[e];
    }
    std::set<std::pair<int, int>> diagonals(t.diagonals.begin(), t.diagonals.end());
    for (int v = 0; v < t.n; ++v)
        if (uses[{v, v + 1}] != 1)
            return false;
    if (uses[{0, t.n}] != 1)
        return false;
    for (const auto& [e, count] : uses) {
        const bool boundary = e.second - e.first == 1 || (e.first == 0 && e.second == t.n);
        if (!boundary && (count != 2 || !diagonals.contains(e)))
            return false;
    }
    // Every listed diagonal must actually occur.
    for (const auto& d : diagonals)
        if (uses[d] != 2)
            return false;
    return true;
}

// ------------------------------------------------------------------ 1-Segal

std::vector<std::size_t> segal1_map(const TruncatedSimplicialSet& k, int n, std::size_t sigma) {
    require_level(k, n, 1);
    std::vector<std::size_t> out;
    for (int i = 1; i <= n; ++i)
        out.push_back(apply_operator(k, MonotoneMap::injection(n, {i - 1, i}), sigma));
    return out;
}

std::vector<std::vector<std::size_t>> edge_chains(const TruncatedSimplicialSet& k, int n) {
    if (k.truncation() < 1)
        throw PreconditionError("edge chains need level 1");
    std::vector<std::vector<std::size_t>> by_source(k.level_size(0));
    for (std::size_t e = 0; e < k.level_size(1); ++e)
        by_source[k.face(1, 1, e)].push_back(e);

    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> chain;
    std::function<void()> extend = [&] {
        if (static_cast<int>(chain.size()) == n) {
            out.push_back(chain);
            return;
        }
        if (chain.empty()) {
            for (std::size_t e = 0; e < k.level_size(1); ++e) {
                chain.push_back(e);
                extend();
                chain.pop_back();
            }
            return;
        }
        for (auto e : by_source[k.face(1, 0, chain.back())]) {
            chain.push_back(e);
            extend();
            chain.pop_back();
        }
    };
    extend();
    return out;
}

SegalReport segal1_check(const TruncatedSimplicialSet& k, int from, std::optional<int> to) {
    SegalReport report{"1-segal", {}, std::nullopt, 0};
    const int last = to.value_or(k.truncation());
    for (int n = std::max(from, 1); n <= std::min(last, k.truncation()); ++n) {
        report.levels.push_back(n);
        auto w = check_bijection(
            n, k.level_size(n), [&](std::size_t s) { return segal1_map(k, n, s); }, edge_chains(k, n),
            report.gap_count);
        if (w) {
            report.witness = std::move(w);
            return report;
        }
    }
    return report;
}

// ------------------------------------------------------------------ 2-Segal

std::vector<std::size_t> segal2_map(const TruncatedSimplicialSet& k, const Triangulation& t, std::size_t sigma) {
    require_level(k, t.n, 2);
    std::vector<std::size_t> out;
    for (const auto& tri : t.triangles)
        out.push_back(apply_operator(k, MonotoneMap::injection(t.n, {tri[0], tri[1], tri[2]}), sigma));
    return out;
}

std::vector<std::vector<std::size_t>> compatible_assignments(const TruncatedSimplicialSet& k,
                                                             const Triangulation& t) {
    require_level(k, 2, 2);
    const auto m = t.triangles.size();
    // by_face[f][edge] = 2-simplices whose d_f is that edge
    std::array<std::vector<std::vector<std::size_t>>, 3> by_face;
    for (int f = 0; f < 3; ++f) {
        by_face[static_cast<std::size_t>(f)].resize(k.level_size(1));
        for (std::size_t x = 0; x < k.level_size(2); ++x)
            by_face[static_cast<std::size_t>(f)][k.face(2, f, x)].push_back(x);
    }

    // Visit triangles so that each one after the first shares an edge with
    // an earlier one.
    std::vector<std::size_t> order{0};
    std::vector<bool> placed(m, false);
    placed[0] = true;
    while (order.size() < m) {
        for (std::size_t a = 0; a < m; ++a) {
            if (placed[a])
                continue;
            bool adjacent = false;
            for (auto b : order)
                for (auto ea : triangle_edges(t.triangles[a]))
                    for (auto eb : triangle_edges(t.triangles[b]))
                        adjacent = adjacent || ea == eb;
            if (adjacent) {
                placed[a] = true;
                order.push_back(a);
            }
        }
    }

    std::map<std::pair<int, int>, std::size_t> edge;
    std::vector<std::size_t> assignment(m, TruncatedSimplicialSet::kUnset);
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> all2(k.level_size(2));
    for (std::size_t x = 0; x < all2.size(); ++x)
        all2[x] = x;

    std::function<void(std::size_t)> step = [&](std::size_t pos) {
        if (pos == m) {
            out.push_back(assignment);
            return;
        }
        const auto& tri = t.triangles[order[pos]];
        const std::vector<std::size_t>* candidates = &all2;
        for (auto [a, b] : triangle_edges(tri))
            if (auto it = edge.find({a, b}); it != edge.end()) {
                candidates = &by_face[static_cast<std::size_t>(face_for_edge(tri, a, b))][it->second];
                break;
            }
        for (auto x : *candidates) {
            bool ok = true;
            std::vector<std::pair<int, int>> added;
            for (auto [a, b] : triangle_edges(tri)) {
                const auto e = k.face(2, face_for_edge(tri, a, b), x);
                auto [it, fresh] = edge.emplace(std::make_pair(a, b), e);
                if (fresh)
                    added.emplace_back(a, b);
                else if (it->second != e) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                assignment[order[pos]] = x;
                step(pos + 1);
            }
            for (const auto& e : added)
                edge.erase(e);
        }
    };
    step(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<std::size_t>> compatible_assignments_brute(const TruncatedSimplicialSet& k,
                                                                   const Triangulation& t) {
    const auto m = t.triangles.size();
    const auto size2 = k.level_size(2);
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> tuple(m, 0);
    if (size2 == 0)
        return out;
    while (true) {
        std::map<std::pair<int, int>, std::size_t> edge;
        bool ok = true;
        for (std::size_t p = 0; p < m && ok; ++p)
            for (auto [a, b] : triangle_edges(t.triangles[p])) {
                const auto e = k.face(2, face_for_edge(t.triangles[p], a, b), tuple[p]);
                auto [it, fresh] = edge.emplace(std::make_pair(a, b), e);
                if (!fresh && it->second != e) {
                    ok = false;
                    break;
                }
            }
        if (ok)
            out.push_back(tuple);
        std::size_t p = m;
        while (p > 0) {
            --p;
            if (++tuple[p] < size2)
                break;
            tuple[p] = 0;
            if (p == 0)
                return out;
        }
        if (m == 0)
            return out;
    }
}

SegalReport segal2_check(const TruncatedSimplicialSet& k, const Triangulation& t) {
    SegalReport report{"2-segal", {t.n}, std::nullopt, 0};
    auto w = check_bijection(
        t.n, k.level_size(t.n), [&](std::size_t s) { return segal2_map(k, t, s); }, compatible_assignments(k, t),
        report.gap_count);
    if (w) {
        w->triangulation = t;
        report.witness = std::move(w);
    }
    return report;
}

SegalReport segal2_check(const TruncatedSimplicialSet& k, int from, std::optional<int> to) {
    if (k.truncation() < 3)
        throw PreconditionError("2-Segal check needs truncation >= 3");
    SegalReport report{"2-segal", {}, std::nullopt, 0};
    const int last = to.value_or(k.truncation());
    for (int n = std::max(from, 2); n <= std::min(last, k.truncation()); ++n) {
        report.levels.push_back(n);
        for (const auto& t : enumerate_triangulations(n)) {
            auto single = segal2_check(k, t);
            if (!single.passed()) {
                report.witness = std::move(single.witness);
                report.gap_count = single.gap_count;
                return report;
            }
        }
    }
    return report;
}

bool verify_witness(const TruncatedSimplicialSet& k, const SegalWitness& w) {
    const bool two = w.triangulation.has_value();
    auto image = [&](std::size_t s) { return two ? segal2_map(k, *w.triangulation, s) : segal1_map(k, w.level, s); };
    if (w.kind == SegalWitness::Kind::non_injective) {
        if (w.simplices.size() != 2 || w.simplices[0] == w.simplices[1])
            return false;
        return image(w.simplices[0]) == w.tuple && image(w.simplices[1]) == w.tuple;
    }
    const auto targets = two ? compatible_assignments(k, *w.triangulation) : edge_chains(k, w.level);
    if (std::find(targets.begin(), targets.end(), w.tuple) == targets.end())
        return false;
    for (std::size_t s = 0; s < k.level_size(w.level); ++s)
        if (image(s) == w.tuple)
            return false;
    return true;
}

// --------------------------------------------------------------- path spaces

namespace {

PathSpace shifted(const TruncatedSimplicialSet& k, int shift, const std::string& name) {
    if (k.truncation() < 1)
        throw PreconditionError("path spaces need truncation >= 1");
    const int top = k.truncation() - 1;
    PathSpace p{TruncatedSimplicialSet(top, name + "(" + k.label() + ")"), {}};
    for (int n = 0; n <= top; ++n)
        for (std::size_t x = 0; x < k.level_size(n + 1); ++x)
            p.space.add_simplex(n, k.descriptor(n + 1, x));
    for (int n = 0; n <= top; ++n) {
        std::vector<std::size_t> comparison;
        for (std::size_t x = 0; x < k.level_size(n + 1); ++x) {
            if (n >= 1)
                for (int i = 0; i <= n; ++i)
                    p.space.set_face(n, i, x, k.face(n + 1, i + shift, x));
            if (n < top)
                for (int i = 0; i <= n; ++i)
                    p.space.set_degeneracy(n, i, x, k.degeneracy(n + 1, i + shift, x));
            comparison.push_back(k.face(n + 1, shift == 1 ? 0 : n + 1, x));
        }
        p.comparison.push_back(std::move(comparison));
    }
    return p;
}

}  // namespace

PathSpace path_space_left(const TruncatedSimplicialSet& k) { return shifted(k, 1, "P_left"); }

PathSpace path_space_right(const TruncatedSimplicialSet& k) { return shifted(k, 0, "P_right"); }

CriterionReport path_space_criterion_check(const TruncatedSimplicialSet& k) {
    if (k.truncation() < 3)
        throw PreconditionError("path space criterion needs truncation >= 3");
    const auto left = path_space_left(k);
    const auto right = path_space_right(k);
    return {segal2_check(k, 3, k.truncation()), segal1_check(left.space, 2, k.truncation() - 1),
            segal1_check(right.space, 2, k.truncation() - 1)};
}

// --------------------------------------------------------------------- JSON

nlohmann::json to_json(const Triangulation& t) {
    nlohmann::json tris = nlohmann::json::array();
    for (const auto& tri : t.triangles)
        tris.push_back({tri[0], tri[1], tri[2]});
    nlohmann::json diags = nlohmann::json::array();
    for (auto [a, b] : t.diagonals)
        diags.push_back({a, b});
    return {{"n", t.n}, {"triangles", tris}, {"diagonals", diags}};
}

nlohmann::json to_json(const TruncatedSimplicialSet& k, const SegalReport& r) {
    nlohmann::json witness = nullptr;
    if (r.witness) {
        const auto& w = *r.witness;
        const bool two = w.triangulation.has_value();
        nlohmann::json simplices = nlohmann::json::array();
        for (auto s : w.simplices)
            simplices.push_back(k.descriptor(w.level, s));
        nlohmann::json tuple = nlohmann::json::array();
        for (auto s : w.tuple)
            tuple.push_back(k.descriptor(two ? 2 : 1, s));
        witness = {{"kind", w.kind == SegalWitness::Kind::non_injective ? "non-injective" : "non-surjective"},
                   {"level", w.level},
                   {"simplices", simplices},
                   {"tuple", tuple},
                   {"gap_count", r.gap_count}};
        if (two)
            witness["triangulation"] = to_json(*w.triangulation);
    }
    return {{"check", r.check},
            {"levels", r.levels},
            {"verdict", r.passed() ? "pass" : "fail"},
            {"witness", witness}};
}

nlohmann::json to_json(const TruncatedSimplicialSet& k, const CriterionReport& r) {
    nlohmann::json levels = nlohmann::json::array();
    for (int n : r.segal2.levels)
        levels.push_back(n);
    const auto left = path_space_left(k);
    const auto right = path_space_right(k);
    nlohmann::json witness = nullptr;
    if (!r.segal2.passed() || !r.path_spaces_pass())
        witness = {{"2-segal", to_json(k, r.segal2)},
                   {"left", to_json(left.space, r.left)},
                   {"right", to_json(right.space, r.right)}};
    return {{"check", "path-criterion"},
            {"levels", levels},
            {"verdict", r.segal2.passed() && r.path_spaces_pass() ? "pass" : "fail"},
            {"direct", r.segal2.passed() ? "pass" : "fail"},
            {"path_spaces", r.path_spaces_pass() ? "pass" : "fail"},
            {"agree", r.agree()},
            {"witness", witness}};
}

}  // namespace segal
