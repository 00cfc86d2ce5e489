#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

namespace segal {

using Descriptor = nlohmann::json;

/// Malformed or inconsistent input data (bad tables, unparsable files).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An operation was called on arguments outside its contract.
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SimplexId {
    int level = 0;
    std::size_t index = 0;

    auto operator<=>(const SimplexId&) const = default;
};

/// An order-preserving map [m] -> [n], stored as its list of m+1 values.
class MonotoneMap {
public:
    MonotoneMap(int target_arity, std::vector<int> values);

    static MonotoneMap identity(int n);
    /// d^i : [n-1] -> [n], skipping i.
    static MonotoneMap coface(int n, int i);
    /// s^i : [n+1] -> [n], hitting i twice.
    static MonotoneMap codegeneracy(int n, int i);
    /// The injection [k] -> [n] with the given strictly increasing image.
    static MonotoneMap injection(int n, std::vector<int> image);

    int source_arity() const { return static_cast<int>(values_.size()) - 1; }
    int target_arity() const { return target_; }
    const std::vector<int>& values() const { return values_; }
    int operator()(int j) const { return values_.at(static_cast<std::size_t>(j)); }

    bool is_injective() const;
    bool is_surjective() const;

    /// (*this) o first, i.e. first is applied before *this.
    MonotoneMap after(const MonotoneMap& first) const;

    bool operator==(const MonotoneMap&) const = default;

private:
    int target_;
    std::vector<int> values_;
};

/// All monotone maps [m] -> [n] in lexicographic order of their values.
std::vector<MonotoneMap> monotone_maps(int m, int n);

/// A simplicial set stored on levels 0..truncation, with explicit face and
/// degeneracy tables. Simplices are identified by a canonical descriptor.
class TruncatedSimplicialSet {
public:
    explicit TruncatedSimplicialSet(int truncation, std::string label = {});

    int truncation() const { return truncation_; }
    const std::string& label() const { return label_; }
    void set_label(std::string label) { label_ = std::move(label); }

    std::size_t level_size(int n) const { return levels_.at(check_level(n)).size(); }
    const Descriptor& descriptor(int n, std::size_t index) const;
    const Descriptor& descriptor(SimplexId id) const { return descriptor(id.level, id.index); }
    std::optional<std::size_t> find(int n, const Descriptor& d) const;
    /// Like find, but throws InputError when the descriptor is absent.
    std::size_t index_of(int n, const Descriptor& d) const;

    /// d_i : K_n -> K_{n-1}, for 1 <= n <= truncation.
    std::size_t face(int n, int i, std::size_t index) const;
    /// s_i : K_n -> K_{n+1}, for 0 <= n < truncation.
    std::size_t degeneracy(int n, int i, std::size_t index) const;

    bool is_degenerate(int n, std::size_t index) const;

    // Construction. Builders add every simplex of every level first, then fill
    // the tables; complete() reports whether every table entry is set.
    std::size_t add_simplex(int n, Descriptor d);
    void set_face(int n, int i, std::size_t index, std::size_t target);
    void set_degeneracy(int n, int i, std::size_t index, std::size_t target);
    bool complete() const;

    static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

private:
    std::size_t check_level(int n) const;

    int truncation_;
    std::string label_;
    std::vector<std::vector<Descriptor>> levels_;
    std::vector<std::unordered_map<std::string, std::size_t>> keys_;
    // faces_[n][i][index], n >= 1; degeneracies_[n][i][index], n < truncation
    std::vector<std::vector<std::vector<std::size_t>>> faces_;
    std::vector<std::vector<std::vector<std::size_t>>> degeneracies_;
};

/// A simplicial model: enumerates payloads per level and computes faces and
/// degeneracies on payloads. build_simplicial_set turns it into tables.
template <typename M>
concept SimplicialModel = requires(const M& m, int n, int i, const typename M::Simplex& s) {
    { m.simplices(n) } -> std::convertible_to<std::vector<typename M::Simplex>>;
    { m.face(n, i, s) } -> std::convertible_to<typename M::Simplex>;
    { m.degeneracy(n, i, s) } -> std::convertible_to<typename M::Simplex>;
    { m.describe(s) } -> std::convertible_to<Descriptor>;
};

template <SimplicialModel M>
TruncatedSimplicialSet build_simplicial_set(const M& model, int truncation, std::string label) {
    if (truncation < 0)
        throw PreconditionError("truncation must be non-negative");
    TruncatedSimplicialSet k(truncation, std::move(label));
    std::vector<std::vector<typename M::Simplex>> payloads;
    for (int n = 0; n <= truncation; ++n) {
        payloads.push_back(model.simplices(n));
        for (const auto& s : payloads.back())
            k.add_simplex(n, model.describe(s));
    }
    for (int n = 0; n <= truncation; ++n) {
        const auto& level = payloads[static_cast<std::size_t>(n)];
        for (std::size_t idx = 0; idx < level.size(); ++idx) {
            if (n >= 1)
                for (int i = 0; i <= n; ++i)
                    k.set_face(n, i, idx, k.index_of(n - 1, model.describe(model.face(n, i, level[idx]))));
            if (n < truncation)
                for (int i = 0; i <= n; ++i)
                    k.set_degeneracy(n, i, idx,
                                     k.index_of(n + 1, model.describe(model.degeneracy(n, i, level[idx]))));
        }
    }
    return k;
}

/// One table entry, used to point at the data behind a failed identity.
struct TableEntry {
    enum class Kind { face, degeneracy } kind;
    int level;
    int i;
    std::size_t index;

    bool operator==(const TableEntry&) const = default;
};

struct IdentityViolation {
    std::string identity;  // e.g. "d_i d_j = d_{j-1} d_i"
    int level;             // level of the simplex the identity was applied to
    std::size_t simplex;
    int i;
    int j;
    std::vector<TableEntry> entries;  // table entries read on both sides
};

struct ValidationReport {
    std::vector<IdentityViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks every simplicial identity that fits inside the truncation.
ValidationReport validate(const TruncatedSimplicialSet& k);

/// K(alpha)(sigma): faces for the missing values (decreasing), then
/// degeneracies for the repeated ones (increasing).
std::size_t apply_operator(const TruncatedSimplicialSet& k, const MonotoneMap& alpha, std::size_t sigma);

/// Delta[n] truncated at level N: level k holds all monotone maps [k] -> [n].
TruncatedSimplicialSet standard_simplex(int n, int truncation);
/// The spine G(n) inside Delta[n].
TruncatedSimplicialSet spine(int n, int truncation);
/// The boundary of Delta[n]: all non-surjective maps.
TruncatedSimplicialSet simplex_boundary(int n, int truncation);

/// Levelwise maps K -> K', map[n][index in K_n] = index in K'_n.
using LevelMap = std::vector<std::vector<std::size_t>>;

struct IsomorphismReport {
    bool ok = false;
    std::string reason;
    std::optional<int> level;  // first failing level, if any
    std::optional<LevelMap> map;
};

/// Checks that a level map commutes with every face and degeneracy.
std::optional<std::string> check_simplicial_map(const TruncatedSimplicialSet& source,
                                                const TruncatedSimplicialSet& target, const LevelMap& map);

/// With a witness, verifies it is a simplicial bijection; without one,
/// searches for one by backtracking (small inventories only).
IsomorphismReport levelwise_isomorphic(const TruncatedSimplicialSet& k, const TruncatedSimplicialSet& other,
                                       const std::optional<LevelMap>& witness = std::nullopt);

nlohmann::json to_json(const TruncatedSimplicialSet& k);
TruncatedSimplicialSet simplicial_set_from_json(const nlohmann::json& j);

}  // namespace segal
