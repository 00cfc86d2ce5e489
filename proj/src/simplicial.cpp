#include "segal/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace segal {

// ---------------------------------------------------------------- MonotoneMap

MonotoneMap::MonotoneMap(int target_arity, std::vector<int> values) : target_(target_arity), values_(std::move(values)) {
    if (target_ < 0 || values_.empty())
        throw PreconditionError("monotone map needs a non-empty source and target");
    for (std::size_t j = 0; j < values_.size(); ++j) {
        if (values_[j] < 0 || values_[j] > target_)
            throw PreconditionError("monotone map value out of range");
        if (j > 0 && values_[j - 1] > values_[j])
            throw PreconditionError("monotone map values must be weakly increasing");
    }
}

MonotoneMap MonotoneMap::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n + 1));
    for (int j = 0; j <= n; ++j)
        v[static_cast<std::size_t>(j)] = j;
    return MonotoneMap(n, std::move(v));
}

MonotoneMap MonotoneMap::coface(int n, int i) {
    if (n < 1 || i < 0 || i > n)
        throw PreconditionError("coface index out of range");
    std::vector<int> v;
    for (int j = 0; j < n; ++j)
        v.push_back(j < i ? j : j + 1);
    return MonotoneMap(n, std::move(v));
}

MonotoneMap MonotoneMap::codegeneracy(int n, int i) {
    if (n < 0 || i < 0 || i > n)
        throw PreconditionError("codegeneracy index out of range");
    std::vector<int> v;
    for (int j = 0; j <= n + 1; ++j)
        v.push_back(j <= i ? j : j - 1);
    return MonotoneMap(n, std::move(v));
}

MonotoneMap MonotoneMap::injection(int n, std::vector<int> image) {
    for (std::size_t j = 1; j < image.size(); ++j)
        if (image[j - 1] >= image[j])
            throw PreconditionError("injection image must be strictly increasing");
    return MonotoneMap(n, std::move(image));
}

bool MonotoneMap::is_injective() const {
    return std::adjacent_find(values_.begin(), values_.end()) == values_.end();
}

bool MonotoneMap::is_surjective() const {
    return values_.front() == 0 && values_.back() == target_ &&
           std::adjacent_find(values_.begin(), values_.end(), [](int a, int b) { return b - a > 1; }) ==
               values_.end();
}

MonotoneMap MonotoneMap::after(const MonotoneMap& first) const {
    if (first.target_arity() != source_arity())
        throw PreconditionError("monotone maps are not composable");
    std::vector<int> v;
    for (int x : first.values())
        v.push_back((*this)(x));
    return MonotoneMap(target_, std::move(v));
}

std::vector<MonotoneMap> monotone_maps(int m, int n) {
    std::vector<MonotoneMap> out;
    std::vector<int> v(static_cast<std::size_t>(m + 1), 0);
    std::function<void(int, int)> rec = [&](int pos, int lo) {
        if (pos > m) {
            out.emplace_back(n, v);
            return;
        }
        for (int x = lo; x <= n; ++x) {
            v[static_cast<std::size_t>(pos)] = x;
            rec(pos + 1, x);
        }
    };
    rec(0, 0);
    return out;
}

// ---------------------------------------------------- TruncatedSimplicialSet

TruncatedSimplicialSet::TruncatedSimplicialSet(int truncation, std::string label)
    : truncation_(truncation), label_(std::move(label)) {
    if (truncation < 0)
        throw PreconditionError("truncation must be non-negative");
    const auto levels = static_cast<std::size_t>(truncation + 1);
    levels_.resize(levels);
    keys_.resize(levels);
    faces_.resize(levels);
    degeneracies_.resize(levels);
    for (int n = 0; n <= truncation; ++n) {
        if (n >= 1)
            faces_[static_cast<std::size_t>(n)].resize(static_cast<std::size_t>(n + 1));
        if (n < truncation)
            degeneracies_[static_cast<std::size_t>(n)].resize(static_cast<std::size_t>(n + 1));
    }
}

std::size_t TruncatedSimplicialSet::check_level(int n) const {
    if (n < 0 || n > truncation_) {
        std::ostringstream os;
        os << "level " << n << " outside truncation 0.." << truncation_;
        throw PreconditionError(os.str());
    }
    return static_cast<std::size_t>(n);
}

const Descriptor& TruncatedSimplicialSet::descriptor(int n, std::size_t index) const {
    return levels_.at(check_level(n)).at(index);
}

std::optional<std::size_t> TruncatedSimplicialSet::find(int n, const Descriptor& d) const {
    const auto& keys = keys_.at(check_level(n));
    auto it = keys.find(d.dump());
    if (it == keys.end())
        return std::nullopt;
    return it->second;
}

std::size_t TruncatedSimplicialSet::index_of(int n, const Descriptor& d) const {
    if (auto idx = find(n, d))
        return *idx;
    throw InputError("no simplex " + d.dump() + " at level " + std::to_string(n) + " of " + label_);
}

std::size_t TruncatedSimplicialSet::face(int n, int i, std::size_t index) const {
    if (n < 1 || i < 0 || i > n)
        throw PreconditionError("face d_" + std::to_string(i) + " undefined on level " + std::to_string(n));
    return faces_.at(check_level(n))[static_cast<std::size_t>(i)].at(index);
}

std::size_t TruncatedSimplicialSet::degeneracy(int n, int i, std::size_t index) const {
    if (n >= truncation_ || i < 0 || i > n)
        throw PreconditionError("degeneracy s_" + std::to_string(i) + " undefined on level " + std::to_string(n));
    return degeneracies_.at(check_level(n))[static_cast<std::size_t>(i)].at(index);
}

bool TruncatedSimplicialSet::is_degenerate(int n, std::size_t index) const {
    if (n == 0)
        return false;
    for (int i = 0; i < n; ++i) {
        const auto below = face(n, i, index);
        if (degeneracy(n - 1, i, below) == index)
            return true;
    }
    return false;
}

std::size_t TruncatedSimplicialSet::add_simplex(int n, Descriptor d) {
    const auto lvl = check_level(n);
    auto key = d.dump();
    if (keys_[lvl].contains(key))
        throw InputError("duplicate simplex " + key + " at level " + std::to_string(n));
    const auto idx = levels_[lvl].size();
    keys_[lvl].emplace(std::move(key), idx);
    levels_[lvl].push_back(std::move(d));
    if (n >= 1)
        for (auto& table : faces_[lvl])
            table.push_back(kUnset);
    if (n < truncation_)
        for (auto& table : degeneracies_[lvl])
            table.push_back(kUnset);
    return idx;
}

void TruncatedSimplicialSet::set_face(int n, int i, std::size_t index, std::size_t target) {
    const auto lvl = check_level(n);
    if (n < 1 || i < 0 || i > n)
        throw PreconditionError("face index out of range");
    if (target >= levels_[lvl - 1].size())
        throw InputError("face target out of range");
    faces_[lvl][static_cast<std::size_t>(i)].at(index) = target;
}

void TruncatedSimplicialSet::set_degeneracy(int n, int i, std::size_t index, std::size_t target) {
    const auto lvl = check_level(n);
    if (n >= truncation_ || i < 0 || i > n)
        throw PreconditionError("degeneracy index out of range");
    if (target >= levels_[lvl + 1].size())
        throw InputError("degeneracy target out of range");
    degeneracies_[lvl][static_cast<std::size_t>(i)].at(index) = target;
}

bool TruncatedSimplicialSet::complete() const {
    auto full = [](const auto& tables) {
        for (const auto& level : tables)
            for (const auto& table : level)
                if (std::find(table.begin(), table.end(), kUnset) != table.end())
                    return false;
        return true;
    };
    return full(faces_) && full(degeneracies_);
}

// ------------------------------------------------------------------ validate

namespace {

class IdentityChecker {
public:
    explicit IdentityChecker(const TruncatedSimplicialSet& k) : k_(k) {}

    std::size_t d(int n, int i, std::size_t x) {
        entries_.push_back({TableEntry::Kind::face, n, i, x});
        return k_.face(n, i, x);
    }
    std::size_t s(int n, int i, std::size_t x) {
        entries_.push_back({TableEntry::Kind::degeneracy, n, i, x});
        return k_.degeneracy(n, i, x);
    }
    void expect(bool holds, const char* identity, int level, std::size_t x, int i, int j) {
        if (!holds)
            report_.violations.push_back({identity, level, x, i, j, entries_});
        entries_.clear();
    }

    ValidationReport take() { return std::move(report_); }

private:
    const TruncatedSimplicialSet& k_;
    std::vector<TableEntry> entries_;
    ValidationReport report_;
};

}  // namespace

ValidationReport validate(const TruncatedSimplicialSet& k) {
    IdentityChecker c(k);
    const int top = k.truncation();
    for (int n = 0; n <= top; ++n) {
        for (std::size_t x = 0; x < k.level_size(n); ++x) {
            // d_i d_j = d_{j-1} d_i, i < j
            if (n >= 2)
                for (int j = 1; j <= n; ++j)
                    for (int i = 0; i < j; ++i) {
                        auto lhs = c.d(n - 1, i, c.d(n, j, x));
                        auto rhs = c.d(n - 1, j - 1, c.d(n, i, x));
                        c.expect(lhs == rhs, "d_i d_j = d_{j-1} d_i", n, x, i, j);
                    }
            // s_i s_j = s_{j+1} s_i, i <= j
            if (n + 2 <= top)
                for (int j = 0; j <= n; ++j)
                    for (int i = 0; i <= j; ++i) {
                        auto lhs = c.s(n + 1, i, c.s(n, j, x));
                        auto rhs = c.s(n + 1, j + 1, c.s(n, i, x));
                        c.expect(lhs == rhs, "s_i s_j = s_{j+1} s_i", n, x, i, j);
                    }
            if (n + 1 <= top) {
                for (int j = 0; j <= n; ++j) {
                    // d_j s_j = d_{j+1} s_j = id
                    auto a = c.d(n + 1, j, c.s(n, j, x));
                    c.expect(a == x, "d_j s_j = id", n, x, j, j);
                    auto b = c.d(n + 1, j + 1, c.s(n, j, x));
                    c.expect(b == x, "d_{j+1} s_j = id", n, x, j + 1, j);
                    if (n < 1)
                        continue;
                    // d_i s_j = s_{j-1} d_i, i < j
                    for (int i = 0; i < j; ++i) {
                        auto lhs = c.d(n + 1, i, c.s(n, j, x));
                        auto rhs = c.s(n - 1, j - 1, c.d(n, i, x));
                        c.expect(lhs == rhs, "d_i s_j = s_{j-1} d_i", n, x, i, j);
                    }
                    // d_i s_j = s_j d_{i-1}, i > j+1
                    for (int i = j + 2; i <= n + 1; ++i) {
                        auto lhs = c.d(n + 1, i, c.s(n, j, x));
                        auto rhs = c.s(n - 1, j, c.d(n, i - 1, x));
                        c.expect(lhs == rhs, "d_i s_j = s_j d_{i-1}", n, x, i, j);
                    }
                }
            }
        }
    }
    return c.take();
}

// ------------------------------------------------------------ apply_operator

std::size_t apply_operator(const TruncatedSimplicialSet& k, const MonotoneMap& alpha, std::size_t sigma) {
    const int n = alpha.target_arity();
    const int m = alpha.source_arity();
    if (n > k.truncation() || m > k.truncation())
        throw PreconditionError("operator arity exceeds truncation");
    if (sigma >= k.level_size(n))
        throw PreconditionError("simplex index out of range for operator target arity");

    const auto& v = alpha.values();
    std::vector<bool> hit(static_cast<std::size_t>(n + 1), false);
    for (int x : v)
        hit[static_cast<std::size_t>(x)] = true;

    std::size_t cur = sigma;
    int level = n;
    for (int j = n; j >= 0; --j) {
        if (!hit[static_cast<std::size_t>(j)]) {
            cur = k.face(level, j, cur);
            --level;
        }
    }
    for (int j = 0; j < m; ++j) {
        if (v[static_cast<std::size_t>(j)] == v[static_cast<std::size_t>(j + 1)]) {
            cur = k.degeneracy(level, j, cur);
            ++level;
        }
    }
    return cur;
}

// ------------------------------------------------------ standard simplices

namespace {

TruncatedSimplicialSet sub_simplex(int n, int truncation, std::string label,
                                   const std::function<bool(const MonotoneMap&)>& keep) {
    if (n < 0)
        throw PreconditionError("simplex dimension must be non-negative");
    struct Model {
        using Simplex = MonotoneMap;
        int n;
        const std::function<bool(const MonotoneMap&)>& keep;

        std::vector<MonotoneMap> simplices(int k) const {
            std::vector<MonotoneMap> out;
            for (auto& f : monotone_maps(k, n))
                if (keep(f))
                    out.push_back(std::move(f));
            return out;
        }
        MonotoneMap face(int k, int i, const MonotoneMap& f) const { return f.after(MonotoneMap::coface(k, i)); }
        MonotoneMap degeneracy(int k, int i, const MonotoneMap& f) const {
            return f.after(MonotoneMap::codegeneracy(k, i));
        }
        Descriptor describe(const MonotoneMap& f) const { return f.values(); }
    };
    return build_simplicial_set(Model{n, keep}, truncation, std::move(label));
}

}  // namespace

TruncatedSimplicialSet standard_simplex(int n, int truncation) {
    return sub_simplex(n, truncation, "Delta[" + std::to_string(n) + "]", [](const MonotoneMap&) { return true; });
}

TruncatedSimplicialSet spine(int n, int truncation) {
    if (n < 1)
        throw PreconditionError("spine needs n >= 1");
    return sub_simplex(n, truncation, "G(" + std::to_string(n) + ")", [](const MonotoneMap& f) {
        return f.values().back() - f.values().front() <= 1;
    });
}

TruncatedSimplicialSet simplex_boundary(int n, int truncation) {
    if (n < 1)
        throw PreconditionError("simplex boundary needs n >= 1");
    return sub_simplex(n, truncation, "boundary Delta[" + std::to_string(n) + "]",
                       [](const MonotoneMap& f) { return !f.is_surjective(); });
}

// ---------------------------------------------------------- isomorphisms

std::optional<std::string> check_simplicial_map(const TruncatedSimplicialSet& source,
                                                const TruncatedSimplicialSet& target, const LevelMap& map) {
    const int top = source.truncation();
    if (static_cast<int>(map.size()) != top + 1)
        return "map has the wrong number of levels";
    for (int n = 0; n <= top; ++n) {
        const auto& f = map[static_cast<std::size_t>(n)];
        if (f.size() != source.level_size(n))
            return "map is not total on level " + std::to_string(n);
        for (auto y : f)
            if (y >= target.level_size(n))
                return "map leaves the target on level " + std::to_string(n);
        for (std::size_t x = 0; x < f.size(); ++x) {
            if (n >= 1)
                for (int i = 0; i <= n; ++i)
                    if (map[static_cast<std::size_t>(n - 1)][source.face(n, i, x)] != target.face(n, i, f[x]))
                        return "map does not commute with d_" + std::to_string(i) + " on level " +
                               std::to_string(n) + " at simplex " + source.descriptor(n, x).dump();
            if (n < top)
                for (int i = 0; i <= n; ++i)
                    if (map[static_cast<std::size_t>(n + 1)][source.degeneracy(n, i, x)] !=
                        target.degeneracy(n, i, f[x]))
                        return "map does not commute with s_" + std::to_string(i) + " on level " +
                               std::to_string(n) + " at simplex " + source.descriptor(n, x).dump();
        }
    }
    return std::nullopt;
}

namespace {

bool is_bijection(const std::vector<std::size_t>& f, std::size_t target_size) {
    if (f.size() != target_size)
        return false;
    std::vector<bool> seen(target_size, false);
    for (auto y : f) {
        if (y >= target_size || seen[y])
            return false;
        seen[y] = true;
    }
    return true;
}

class IsoSearch {
public:
    IsoSearch(const TruncatedSimplicialSet& a, const TruncatedSimplicialSet& b) : a_(a), b_(b) {
        const int top = a.truncation();
        map_.resize(static_cast<std::size_t>(top + 1));
        used_.resize(static_cast<std::size_t>(top + 1));
        for (int n = 0; n <= top; ++n) {
            map_[static_cast<std::size_t>(n)].assign(a.level_size(n), TruncatedSimplicialSet::kUnset);
            used_[static_cast<std::size_t>(n)].assign(b.level_size(n), false);
        }
    }

    bool run() { return place(0, 0); }
    LevelMap result() const { return map_; }

private:
    bool consistent(int n, std::size_t x, std::size_t y) const {
        if (a_.is_degenerate(n, x) != b_.is_degenerate(n, y))
            return false;
        if (n >= 1)
            for (int i = 0; i <= n; ++i)
                if (map_[static_cast<std::size_t>(n - 1)][a_.face(n, i, x)] != b_.face(n, i, y))
                    return false;
        if (n >= 1)
            for (int i = 0; i < n; ++i) {
                // x may be s_i of something already placed
                const auto below = a_.face(n, i, x);
                if (a_.degeneracy(n - 1, i, below) == x &&
                    b_.degeneracy(n - 1, i, map_[static_cast<std::size_t>(n - 1)][below]) != y)
                    return false;
            }
        return true;
    }

    bool place(int n, std::size_t x) {
        if (n > a_.truncation())
            return true;
        if (x == a_.level_size(n))
            return place(n + 1, 0);
        for (std::size_t y = 0; y < b_.level_size(n); ++y) {
            if (used_[static_cast<std::size_t>(n)][y] || !consistent(n, x, y))
                continue;
            used_[static_cast<std::size_t>(n)][y] = true;
            map_[static_cast<std::size_t>(n)][x] = y;
            if (place(n, x + 1))
                return true;
            used_[static_cast<std::size_t>(n)][y] = false;
            map_[static_cast<std::size_t>(n)][x] = TruncatedSimplicialSet::kUnset;
        }
        return false;
    }

    const TruncatedSimplicialSet& a_;
    const TruncatedSimplicialSet& b_;
    LevelMap map_;
    std::vector<std::vector<bool>> used_;
};

}  // namespace

IsomorphismReport levelwise_isomorphic(const TruncatedSimplicialSet& k, const TruncatedSimplicialSet& other,
                                       const std::optional<LevelMap>& witness) {
    if (k.truncation() != other.truncation())
        throw PreconditionError("levelwise_isomorphic needs equal truncations");
    IsomorphismReport report;
    for (int n = 0; n <= k.truncation(); ++n) {
        if (k.level_size(n) != other.level_size(n)) {
            report.reason = "level " + std::to_string(n) + " sizes differ: " + std::to_string(k.level_size(n)) +
                            " vs " + std::to_string(other.level_size(n));
            report.level = n;
            return report;
        }
    }
    if (witness) {
        for (int n = 0; n <= k.truncation(); ++n) {
            if (static_cast<int>(witness->size()) <= n ||
                !is_bijection((*witness)[static_cast<std::size_t>(n)], other.level_size(n))) {
                report.reason = "witness is not a bijection on level " + std::to_string(n);
                report.level = n;
                return report;
            }
        }
        if (auto err = check_simplicial_map(k, other, *witness)) {
            report.reason = *err;
            return report;
        }
        report.ok = true;
        report.map = witness;
        return report;
    }
    IsoSearch search(k, other);
    if (!search.run()) {
        report.reason = "no simplicial bijection exists";
        return report;
    }
    report.map = search.result();
    if (auto err = check_simplicial_map(k, other, *report.map)) {
        report.ok = false;
        report.reason = "search produced a non-simplicial map: " + *err;
        return report;
    }
    report.ok = true;
    return report;
}

// --------------------------------------------------------------------- JSON

nlohmann::json to_json(const TruncatedSimplicialSet& k) {
    nlohmann::json levels = nlohmann::json::array();
    nlohmann::json faces = nlohmann::json::array();
    nlohmann::json degeneracies = nlohmann::json::array();
    for (int n = 0; n <= k.truncation(); ++n) {
        nlohmann::json level = nlohmann::json::array();
        for (std::size_t x = 0; x < k.level_size(n); ++x)
            level.push_back(k.descriptor(n, x));
        levels.push_back(std::move(level));
    }
    for (int n = 1; n <= k.truncation(); ++n)
        for (int i = 0; i <= n; ++i)
            for (std::size_t x = 0; x < k.level_size(n); ++x)
                faces.push_back({n, i, x, k.face(n, i, x)});
    for (int n = 0; n < k.truncation(); ++n)
        for (int i = 0; i <= n; ++i)
            for (std::size_t x = 0; x < k.level_size(n); ++x)
                degeneracies.push_back({n, i, x, k.degeneracy(n, i, x)});
    return {{"truncation", k.truncation()},
            {"levels", std::move(levels)},
            {"faces", std::move(faces)},
            {"degeneracies", std::move(degeneracies)},
            {"label", k.label()}};
}

TruncatedSimplicialSet simplicial_set_from_json(const nlohmann::json& j) {
    try {
        const int top = j.at("truncation").get<int>();
        if (top < 0)
            throw InputError("negative truncation");
        TruncatedSimplicialSet k(top, j.value("label", std::string{}));
        const auto& levels = j.at("levels");
        if (!levels.is_array() || static_cast<int>(levels.size()) != top + 1)
            throw InputError("expected " + std::to_string(top + 1) + " levels");
        for (int n = 0; n <= top; ++n)
            for (const auto& d : levels[static_cast<std::size_t>(n)])
                k.add_simplex(n, d);
        for (const auto& e : j.at("faces"))
            k.set_face(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<std::size_t>(), e.at(3).get<std::size_t>());
        for (const auto& e : j.at("degeneracies"))
            k.set_degeneracy(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<std::size_t>(),
                             e.at(3).get<std::size_t>());
        if (!k.complete())
            throw InputError("face/degeneracy tables are incomplete");
        return k;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed simplicial set JSON: ") + e.what());
    } catch (const PreconditionError& e) {
        throw InputError(std::string("malformed simplicial set JSON: ") + e.what());
    } catch (const std::out_of_range& e) {
        throw InputError(std::string("malformed simplicial set JSON: ") + e.what());
    }
}

}  // namespace segal
