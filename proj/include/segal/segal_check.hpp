#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "segal/simplicial.hpp"

namespace segal {

/// A triangulation of the polygon with vertices 0..n, triangles sorted
/// lexicographically.
struct Triangulation {
    int n = 0;
    std::vector<std::array<int, 3>> triangles;
    std::vector<std::pair<int, int>> diagonals;

    bool operator==(const Triangulation&) const = default;
};

/// Every triangulation of the (n+1)-gon, n >= 2.
std::vector<Triangulation> enumerate_triangulations(int n);

/// Checks the tiling invariant: n-1 triangles, diagonals shared by two
/// triangles, boundary edges by one.
bool is_valid_triangulation(const Triangulation& t);

struct SegalWitness {
    enum class Kind { non_injective, non_surjective } kind;
    int level = 0;
    /// non_injective: the two colliding simplices of K_level.
    std::vector<std::size_t> simplices;
    /// The shared image (non_injective) or the missed tuple (non_surjective):
    /// indices into K_1 for 1-Segal, into K_2 for 2-Segal.
    std::vector<std::size_t> tuple;
    std::optional<Triangulation> triangulation;
};

struct SegalReport {
    std::string check;  // "1-segal" | "2-segal"
    std::vector<int> levels;
    std::optional<SegalWitness> witness;
    /// Number of target tuples with no preimage at the failing level.
    std::size_t gap_count = 0;

    bool passed() const { return !witness.has_value(); }
};

/// i-th component: the edge on {i-1, i}.
std::vector<std::size_t> segal1_map(const TruncatedSimplicialSet& k, int n, std::size_t sigma);

/// The set Hom(G(n), K): chains of n edges with matching endpoints.
std::vector<std::vector<std::size_t>> edge_chains(const TruncatedSimplicialSet& k, int n);

/// Pass iff every Segal map K_n -> K_1 x_{K_0} ... x_{K_0} K_1 is a bijection
/// for from <= n <= to. Stops at the first failing level.
SegalReport segal1_check(const TruncatedSimplicialSet& k, int from = 2, std::optional<int> to = std::nullopt);

/// One 2-simplex per triangle (same order as t.triangles).
std::vector<std::size_t> segal2_map(const TruncatedSimplicialSet& k, const Triangulation& t, std::size_t sigma);

/// Compatible assignments of 2-simplices to the triangles of t, built one
/// triangle at a time through edge indexes.
std::vector<std::vector<std::size_t>> compatible_assignments(const TruncatedSimplicialSet& k, const Triangulation& t);
/// Same set, by filtering the full product K_2^{n-1}. Small inputs only.
std::vector<std::vector<std::size_t>> compatible_assignments_brute(const TruncatedSimplicialSet& k,
                                                                   const Triangulation& t);

SegalReport segal2_check(const TruncatedSimplicialSet& k, int from = 3, std::optional<int> to = std::nullopt);
/// Bijectivity of a single triangulation's map at its level.
SegalReport segal2_check(const TruncatedSimplicialSet& k, const Triangulation& t);

/// Re-derives the claimed collision or gap from scratch.
bool verify_witness(const TruncatedSimplicialSet& k, const SegalWitness& w);

struct PathSpace {
    TruncatedSimplicialSet space;
    LevelMap comparison;  // level n of the path space -> K_n
};

/// Level n is K_{n+1}; d_i, s_i act as d_{i+1}, s_{i+1}; comparison d_0.
PathSpace path_space_left(const TruncatedSimplicialSet& k);
/// Level n is K_{n+1}; d_i, s_i act as d_i, s_i; comparison d_{n+1}.
PathSpace path_space_right(const TruncatedSimplicialSet& k);

struct CriterionReport {
    SegalReport segal2;
    SegalReport left;
    SegalReport right;

    bool path_spaces_pass() const { return left.passed() && right.passed(); }
    bool agree() const { return segal2.passed() == path_spaces_pass(); }
};

/// 2-Segal on levels 3..N against 1-Segal of both path spaces on 2..N-1.
CriterionReport path_space_criterion_check(const TruncatedSimplicialSet& k);

nlohmann::json to_json(const Triangulation& t);
nlohmann::json to_json(const TruncatedSimplicialSet& k, const SegalReport& r);
nlohmann::json to_json(const TruncatedSimplicialSet& k, const CriterionReport& r);

}  // namespace segal
