#include "segal/double_category.hpp"

#include <algorithm>
#include <set>

namespace segal {

// ------------------------------------------------------------ DoubleCategory

std::size_t DoubleCategory::add_object(const std::string& name) {
    ver_.add_object(name);
    return hor_.add_object(name);
}

std::size_t DoubleCategory::add_hor(std::string id, std::size_t source, std::size_t target) {
    return hor_.add_morphism(std::move(id), source, target);
}

std::size_t DoubleCategory::add_ver(std::string id, std::size_t source, std::size_t target) {
    return ver_.add_morphism(std::move(id), source, target);
}

std::size_t DoubleCategory::add_square(std::string id, std::size_t top, std::size_t bottom, std::size_t left,
                                       std::size_t right) {
    if (find_square(id))
        throw InputError("duplicate square " + id);
    if (top >= hor_.morphisms().size() || bottom >= hor_.morphisms().size() || left >= ver_.morphisms().size() ||
        right >= ver_.morphisms().size())
        throw InputError("square " + id + " has an unknown boundary morphism");
    squares_.push_back({std::move(id), top, bottom, left, right});
    by_span_[{top, left}].push_back(squares_.size() - 1);
    by_cospan_[{bottom, right}].push_back(squares_.size() - 1);
    return squares_.size() - 1;
}

void DoubleCategory::remove_square(std::size_t square) {
    squares_.erase(squares_.begin() + static_cast<std::ptrdiff_t>(square));
    reindex();
}

void DoubleCategory::reindex() {
    by_span_.clear();
    by_cospan_.clear();
    for (std::size_t s = 0; s < squares_.size(); ++s) {
        by_span_[{squares_[s].top, squares_[s].left}].push_back(s);
        by_cospan_[{squares_[s].bottom, squares_[s].right}].push_back(s);
    }
}

std::optional<std::size_t> DoubleCategory::find_square(const std::string& id) const {
    for (std::size_t s = 0; s < squares_.size(); ++s)
        if (squares_[s].id == id)
            return s;
    return std::nullopt;
}

std::vector<std::size_t> DoubleCategory::squares_with_span(std::size_t top, std::size_t left) const {
    auto it = by_span_.find({top, left});
    return it == by_span_.end() ? std::vector<std::size_t>{} : it->second;
}

std::vector<std::size_t> DoubleCategory::squares_with_cospan(std::size_t bottom, std::size_t right) const {
    auto it = by_cospan_.find({bottom, right});
    return it == by_cospan_.end() ? std::vector<std::size_t>{} : it->second;
}

void DoubleCategory::add_identity_squares() {
    const auto& hm = hor_.morphisms();
    const auto& vm = ver_.morphisms();
    for (std::size_t f = 0; f < hm.size(); ++f) {
        const auto left = ver_.identity(hm[f].source);
        if (squares_with_span(f, left).empty())
            add_square("1v(" + hm[f].id + ")", f, f, left, ver_.identity(hm[f].target));
    }
    for (std::size_t v = 0; v < vm.size(); ++v) {
        const auto top = hor_.identity(vm[v].source);
        if (squares_with_span(top, v).empty())
            add_square("1h(" + vm[v].id + ")", top, hor_.identity(vm[v].target), v, v);
    }
}

// ------------------------------------------------------ pointed and stable

namespace {

std::vector<std::size_t> hor_between_objects(const DoubleCategory& d, std::size_t a, std::size_t b) {
    std::vector<std::size_t> out;
    const auto& m = d.hor().morphisms();
    for (std::size_t f = 0; f < m.size(); ++f)
        if (m[f].source == a && m[f].target == b)
            out.push_back(f);
    return out;
}

std::vector<std::size_t> ver_between_objects(const DoubleCategory& d, std::size_t a, std::size_t b) {
    std::vector<std::size_t> out;
    const auto& m = d.ver().morphisms();
    for (std::size_t v = 0; v < m.size(); ++v)
        if (m[v].source == a && m[v].target == b)
            out.push_back(v);
    return out;
}

std::size_t require_point(const DoubleCategory& d) {
    if (!d.point())
        throw PreconditionError("double category has no distinguished point");
    return *d.point();
}

// The unique a ->> point.
std::size_t to_point(const DoubleCategory& d, std::size_t a) {
    const auto arrows = ver_between_objects(d, a, require_point(d));
    if (arrows.size() != 1)
        throw PreconditionError("no unique vertical morphism from " + d.objects()[a] + " to the point");
    return arrows.front();
}

}  // namespace

PointedReport check_pointed(const DoubleCategory& d) {
    const auto p = require_point(d);
    for (std::size_t a = 0; a < d.objects().size(); ++a) {
        const auto h = hor_between_objects(d, p, a).size();
        if (h != 1)
            return {false, a, std::to_string(h) + " horizontal morphisms from the point to " + d.objects()[a]};
        const auto v = ver_between_objects(d, a, p).size();
        if (v != 1)
            return {false, a, std::to_string(v) + " vertical morphisms from " + d.objects()[a] + " to the point"};
    }
    return {true, std::nullopt, {}};
}

StabilityReport check_stable(const DoubleCategory& d) {
    const auto& hm = d.hor().morphisms();
    const auto& vm = d.ver().morphisms();
    for (std::size_t h = 0; h < hm.size(); ++h)
        for (std::size_t v = 0; v < vm.size(); ++v) {
            if (hm[h].source == vm[v].source) {
                const auto n = d.squares_with_span(h, v).size();
                if (n != 1)
                    return {false, StabilityReport::Side::span, h, v, n};
            }
            if (hm[h].target == vm[v].target) {
                const auto n = d.squares_with_cospan(h, v).size();
                if (n != 1)
                    return {false, StabilityReport::Side::cospan, h, v, n};
            }
        }
    return {};
}

std::optional<std::size_t> fill_span(const DoubleCategory& d, std::size_t h, std::size_t v) {
    const auto found = d.squares_with_span(h, v);
    if (found.size() != 1)
        return std::nullopt;
    return found.front();
}

std::optional<std::size_t> fill_cospan(const DoubleCategory& d, std::size_t h, std::size_t v) {
    const auto found = d.squares_with_cospan(h, v);
    if (found.size() != 1)
        return std::nullopt;
    return found.front();
}

std::size_t vertical_identity_square(const DoubleCategory& d, std::size_t f) {
    const auto& m = d.hor().morphisms().at(f);
    const auto s = fill_span(d, f, d.ver().identity(m.source));
    if (!s || d.squares()[*s].bottom != f || d.squares()[*s].right != d.ver().identity(m.target))
        throw InputError("no vertical identity square on " + m.id);
    return *s;
}

std::size_t horizontal_identity_square(const DoubleCategory& d, std::size_t v) {
    const auto& m = d.ver().morphisms().at(v);
    const auto s = fill_span(d, d.hor().identity(m.source), v);
    if (!s || d.squares()[*s].right != v || d.squares()[*s].bottom != d.hor().identity(m.target))
        throw InputError("no horizontal identity square on " + m.id);
    return *s;
}

std::size_t compose_squares_h(const DoubleCategory& d, std::size_t alpha, std::size_t beta) {
    const auto& a = d.squares().at(alpha);
    const auto& b = d.squares().at(beta);
    if (a.right != b.left)
        throw PreconditionError("squares " + a.id + ", " + b.id + " are not horizontally composable");
    const auto top = d.hor().compose(a.top, b.top);
    const auto s = fill_span(d, top, a.left);
    if (!s)
        throw InputError("no unique filler for the horizontal composite of " + a.id + ", " + b.id);
    const auto& c = d.squares()[*s];
    if (c.bottom != d.hor().compose(a.bottom, b.bottom) || c.right != b.right)
        throw InputError("coherence failure composing " + a.id + ", " + b.id + " horizontally");
    return *s;
}

std::size_t compose_squares_v(const DoubleCategory& d, std::size_t alpha, std::size_t beta) {
    const auto& a = d.squares().at(alpha);
    const auto& b = d.squares().at(beta);
    if (a.bottom != b.top)
        throw PreconditionError("squares " + a.id + ", " + b.id + " are not vertically composable");
    const auto left = d.ver().compose(a.left, b.left);
    const auto s = fill_span(d, a.top, left);
    if (!s)
        throw InputError("no unique filler for the vertical composite of " + a.id + ", " + b.id);
    const auto& c = d.squares()[*s];
    if (c.bottom != b.bottom || c.right != d.ver().compose(a.right, b.right))
        throw InputError("coherence failure composing " + a.id + ", " + b.id + " vertically");
    return *s;
}

DoubleCategoryReport validate_double_category(const DoubleCategory& d) {
    DoubleCategoryReport report;
    for (const auto& p : d.hor().problems())
        report.problems.push_back("horizontal: " + p);
    for (const auto& p : d.ver().problems())
        report.problems.push_back("vertical: " + p);
    const auto& hm = d.hor().morphisms();
    const auto& vm = d.ver().morphisms();
    for (const auto& s : d.squares()) {
        const bool ok = hm[s.top].source == vm[s.left].source && hm[s.top].target == vm[s.right].source &&
                        vm[s.left].target == hm[s.bottom].source && hm[s.bottom].target == vm[s.right].target;
        if (!ok)
            report.problems.push_back("square " + s.id + " has inconsistent corners");
    }
    if (!report.problems.empty())
        return report;

    const auto stability = check_stable(d);
    report.stable = stability.ok;
    if (!stability.ok) {
        const bool span = stability.side == StabilityReport::Side::span;
        report.problems.push_back(std::string(span ? "span (" : "cospan (") + hm[stability.hor].id + ", " +
                                  vm[stability.ver].id + ") has " + std::to_string(stability.fillers) +
                                  " fillers");
        return report;
    }

    try {
        for (std::size_t f = 0; f < hm.size(); ++f)
            vertical_identity_square(d, f);
        for (std::size_t v = 0; v < vm.size(); ++v)
            horizontal_identity_square(d, v);
        const auto& sq = d.squares();
        for (std::size_t s = 0; s < sq.size(); ++s) {
            if (compose_squares_h(d, horizontal_identity_square(d, sq[s].left), s) != s ||
                compose_squares_h(d, s, horizontal_identity_square(d, sq[s].right)) != s ||
                compose_squares_v(d, vertical_identity_square(d, sq[s].top), s) != s ||
                compose_squares_v(d, s, vertical_identity_square(d, sq[s].bottom)) != s)
                report.problems.push_back("identity squares are not units for " + sq[s].id);
        }
        std::map<std::size_t, std::vector<std::size_t>> by_left, by_top;
        for (std::size_t s = 0; s < sq.size(); ++s) {
            by_left[sq[s].left].push_back(s);
            by_top[sq[s].top].push_back(s);
        }
        for (std::size_t a = 0; a < sq.size(); ++a)
            for (auto b : by_left[sq[a].right])
                for (auto c : by_top[sq[a].bottom])
                    for (auto e : by_top[sq[b].bottom]) {
                        if (sq[e].left != sq[c].right)
                            continue;
                        ++report.grids_checked;
                        const auto rows = compose_squares_v(d, compose_squares_h(d, a, b), compose_squares_h(d, c, e));
                        const auto cols = compose_squares_h(d, compose_squares_v(d, a, c), compose_squares_v(d, b, e));
                        if (rows != cols)
                            report.problems.push_back("interchange fails on grid " + sq[a].id + ", " + sq[b].id +
                                                      ", " + sq[c].id + ", " + sq[e].id);
                    }
    } catch (const std::runtime_error& e) {
        report.problems.push_back(e.what());
    }
    return report;
}

// --------------------------------------------------------------- staircases

StaircaseDiagram::StaircaseDiagram(int n) : n_(n) {
    if (n < 0)
        throw PreconditionError("staircase level must be non-negative");
    const auto size = static_cast<std::size_t>((n + 1) * (n + 1));
    objects_.assign(size, TruncatedSimplicialSet::kUnset);
    hor_ = ver_ = cells_ = objects_;
}

std::size_t& StaircaseDiagram::at(std::vector<std::size_t>& v, int i, int j) {
    if (i < 0 || j < i || j > n_)
        throw PreconditionError("staircase position outside 0 <= i <= j <= n");
    return v[static_cast<std::size_t>(i * (n_ + 1) + j)];
}

std::size_t StaircaseDiagram::at(const std::vector<std::size_t>& v, int i, int j) const {
    if (i < 0 || j < i || j > n_)
        throw PreconditionError("staircase position outside 0 <= i <= j <= n");
    return v[static_cast<std::size_t>(i * (n_ + 1) + j)];
}

std::optional<std::string> check_staircase(const DoubleCategory& d, const StaircaseDiagram& s) {
    const auto n = s.n();
    const auto& hm = d.hor().morphisms();
    const auto& vm = d.ver().morphisms();
    const auto unset = TruncatedSimplicialSet::kUnset;
    auto where = [](int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; };
    for (int i = 0; i <= n; ++i) {
        if (s.object(i, i) != d.point())
            return "diagonal entry " + where(i, i) + " is not the point";
        for (int j = i; j <= n; ++j) {
            if (s.object(i, j) == unset)
                return "object " + where(i, j) + " missing";
            if (j < n) {
                const auto h = s.hor(i, j);
                if (h == unset || hm[h].source != s.object(i, j) || hm[h].target != s.object(i, j + 1))
                    return "horizontal arrow " + where(i, j) + " does not fit";
            }
            if (i < j) {
                const auto v = s.ver(i, j);
                if (v == unset || vm[v].source != s.object(i, j) || vm[v].target != s.object(i + 1, j))
                    return "vertical arrow " + where(i, j) + " does not fit";
            }
            if (i < j && j < n) {
                const auto c = s.cell(i, j);
                if (c == unset)
                    return "cell " + where(i, j) + " missing";
                const auto& sq = d.squares()[c];
                if (sq.top != s.hor(i, j) || sq.left != s.ver(i, j) || sq.bottom != s.hor(i + 1, j) ||
                    sq.right != s.ver(i, j + 1))
                    return "cell " + where(i, j) + " has the wrong boundary";
            }
        }
    }
    return std::nullopt;
}

namespace {

void fill_below_top_row(const DoubleCategory& d, StaircaseDiagram& s) {
    const int n = s.n();
    const auto point = *d.point();
    for (int i = 0; i <= n; ++i)
        s.object(i, i) = point;
    for (int k = 0; k < n; ++k) {
        if (k > 0)
            for (int j = k; j < n; ++j) {
                s.hor(k, j) = d.squares()[s.cell(k - 1, j)].bottom;
                s.object(k, j + 1) = d.hor().morphisms()[s.hor(k, j)].target;
            }
        s.ver(k, k + 1) = to_point(d, s.object(k, k + 1));
        for (int j = k + 1; j < n; ++j) {
            const auto c = fill_span(d, s.hor(k, j), s.ver(k, j));
            if (!c)
                throw PreconditionError("staircase fill has no unique square");
            s.cell(k, j) = *c;
            s.ver(k, j + 1) = d.squares()[*c].right;
        }
    }
}

// Composite a_ij >-> a_il along row i.
std::size_t hor_between(const DoubleCategory& d, const StaircaseDiagram& s, int i, int j, int l) {
    auto out = d.hor().identity(s.object(i, j));
    for (int c = j; c < l; ++c)
        out = d.hor().compose(out, s.hor(i, c));
    return out;
}

// Composite a_ij ->> a_kj down column j.
std::size_t ver_between(const DoubleCategory& d, const StaircaseDiagram& s, int i, int k, int j) {
    auto out = d.ver().identity(s.object(i, j));
    for (int r = i; r < k; ++r)
        out = d.ver().compose(out, s.ver(r, j));
    return out;
}

// The square with corners a_ij, a_il, a_kj, a_kl.
std::size_t square_between(const DoubleCategory& d, const StaircaseDiagram& s, int i, int k, int j, int l) {
    if (i == k)
        return vertical_identity_square(d, hor_between(d, s, i, j, l));
    if (j == l)
        return horizontal_identity_square(d, ver_between(d, s, i, k, j));
    std::optional<std::size_t> out;
    for (int r = i; r < k; ++r) {
        auto strip = s.cell(r, j);
        for (int c = j + 1; c < l; ++c)
            strip = compose_squares_h(d, strip, s.cell(r, c));
        out = out ? compose_squares_v(d, *out, strip) : strip;
    }
    return *out;
}

const std::string& name_of(const DoubleCategory& d, std::size_t idx, int sort) {
    switch (sort) {
    case 0:
        return d.objects()[idx];
    case 1:
        return d.hor().morphisms()[idx].id;
    case 2:
        return d.ver().morphisms()[idx].id;
    default:
        return d.squares()[idx].id;
    }
}

}  // namespace

std::vector<StaircaseDiagram> staircases(const DoubleCategory& d, int n) {
    const auto point = require_point(d);
    std::vector<StaircaseDiagram> out;
    StaircaseDiagram s(n);
    std::vector<std::vector<std::size_t>> outgoing(d.objects().size());
    for (std::size_t f = 0; f < d.hor().morphisms().size(); ++f)
        outgoing[d.hor().morphisms()[f].source].push_back(f);

    // Row 0 is a chain point >-> a_01 >-> ... >-> a_0n; every other entry is forced.
    auto extend = [&](auto&& self, int j, std::size_t at) -> void {
        if (j == n) {
            auto full = s;
            fill_below_top_row(d, full);
            if (auto problem = check_staircase(d, full))
                throw PreconditionError("staircase fill is not boundary-coherent: " + *problem);
            out.push_back(std::move(full));
            return;
        }
        for (auto f : outgoing[at]) {
            s.hor(0, j) = f;
            s.object(0, j + 1) = d.hor().morphisms()[f].target;
            self(self, j + 1, s.object(0, j + 1));
        }
    };
    s.object(0, 0) = point;
    extend(extend, 0, point);
    return out;
}

StaircaseDiagram restrict_staircase(const DoubleCategory& d, const StaircaseDiagram& s, const MonotoneMap& alpha) {
    if (alpha.target_arity() != s.n())
        throw PreconditionError("monotone map does not land in the staircase level");
    const int m = alpha.source_arity();
    StaircaseDiagram r(m);
    for (int p = 0; p <= m; ++p)
        for (int q = p; q <= m; ++q) {
            r.object(p, q) = s.object(alpha(p), alpha(q));
            if (q < m)
                r.hor(p, q) = hor_between(d, s, alpha(p), alpha(q), alpha(q + 1));
            if (p < q)
                r.ver(p, q) = ver_between(d, s, alpha(p), alpha(p + 1), alpha(q));
            if (p < q && q < m)
                r.cell(p, q) = square_between(d, s, alpha(p), alpha(p + 1), alpha(q), alpha(q + 1));
        }
    return r;
}

Descriptor describe(const DoubleCategory& d, const StaircaseDiagram& s) {
    const int n = s.n();
    Descriptor rows[4] = {Descriptor::array(), Descriptor::array(), Descriptor::array(), Descriptor::array()};
    for (int i = 0; i <= n; ++i) {
        Descriptor row[4] = {Descriptor::array(), Descriptor::array(), Descriptor::array(), Descriptor::array()};
        for (int j = i; j <= n; ++j) {
            row[0].push_back(name_of(d, s.object(i, j), 0));
            if (j < n)
                row[1].push_back(name_of(d, s.hor(i, j), 1));
            if (i < j)
                row[2].push_back(name_of(d, s.ver(i, j), 2));
            if (i < j && j < n)
                row[3].push_back(name_of(d, s.cell(i, j), 3));
        }
        for (int k = 0; k < 4; ++k)
            rows[k].push_back(std::move(row[k]));
    }
    return {{"objects", rows[0]}, {"hor", rows[1]}, {"ver", rows[2]}, {"cells", rows[3]}};
}

StaircaseDiagram staircase_from(const DoubleCategory& d, const Descriptor& desc) {
    try {
        const int n = static_cast<int>(desc.at("objects").size()) - 1;
        StaircaseDiagram s(n);
        auto lookup = [&](const Descriptor& name, int sort) -> std::size_t {
            const auto id = name.get<std::string>();
            std::optional<std::size_t> found;
            if (sort == 0)
                found = d.hor().find_object(id);
            else if (sort == 1)
                found = d.hor().find_morphism(id);
            else if (sort == 2)
                found = d.ver().find_morphism(id);
            else
                found = d.find_square(id);
            if (!found)
                throw InputError("staircase refers to unknown entry " + id);
            return *found;
        };
        for (int i = 0; i <= n; ++i)
            for (int j = i; j <= n; ++j) {
                const auto u = static_cast<std::size_t>(i);
                s.object(i, j) = lookup(desc.at("objects").at(u).at(static_cast<std::size_t>(j - i)), 0);
                if (j < n)
                    s.hor(i, j) = lookup(desc.at("hor").at(u).at(static_cast<std::size_t>(j - i)), 1);
                if (i < j)
                    s.ver(i, j) = lookup(desc.at("ver").at(u).at(static_cast<std::size_t>(j - i - 1)), 2);
                if (i < j && j < n)
                    s.cell(i, j) = lookup(desc.at("cells").at(u).at(static_cast<std::size_t>(j - i - 1)), 3);
            }
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed staircase descriptor: ") + e.what());
    }
}

namespace {

struct StaircaseModel {
    using Simplex = StaircaseDiagram;
    const DoubleCategory& d;

    std::vector<Simplex> simplices(int n) const { return staircases(d, n); }
    Simplex face(int n, int i, const Simplex& s) const {
        return restrict_staircase(d, s, MonotoneMap::coface(n, i));
    }
    Simplex degeneracy(int n, int i, const Simplex& s) const {
        return restrict_staircase(d, s, MonotoneMap::codegeneracy(n, i));
    }
    Descriptor describe(const Simplex& s) const { return segal::describe(d, s); }
};

}  // namespace

TruncatedSimplicialSet s_construction(const DoubleCategory& d, int truncation) {
    const auto report = validate_double_category(d);
    if (!report.ok())
        throw PreconditionError("not a stable double category: " + report.problems.front());
    const auto pointed = check_pointed(d);
    if (!pointed.ok)
        throw PreconditionError("not pointed: " + pointed.detail);
    return build_simplicial_set(StaircaseModel{d}, truncation, "S(D)");
}

// ------------------------------------------------------------ P construction

namespace {

// Checks that sigma -> (d_i sigma, d_j sigma) maps X_3 bijectively onto the
// pairs (f, g) with d_a f = d_b g.
std::optional<std::string> face_pair_bijection(const TruncatedSimplicialSet& x, int i, int j, int a, int b) {
    const std::string name = "(d_" + std::to_string(i) + ",d_" + std::to_string(j) + ")";
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> hits;
    for (std::size_t s = 0; s < x.level_size(3); ++s) {
        const auto key = std::make_pair(x.face(3, i, s), x.face(3, j, s));
        if (hits.contains(key))
            return name + " is not injective: " + x.descriptor(3, hits[key]).dump() + " and " +
                   x.descriptor(3, s).dump() + " have the same image";
        hits[key] = s;
    }
    for (std::size_t f = 0; f < x.level_size(2); ++f)
        for (std::size_t g = 0; g < x.level_size(2); ++g)
            if (x.face(2, a, f) == x.face(2, b, g) && !hits.contains({f, g}))
                return name + " is not surjective: no 3-simplex over (" + x.descriptor(2, f).dump() + ", " +
                       x.descriptor(2, g).dump() + ")";
    return std::nullopt;
}

}  // namespace

DoubleCategory p_construction(const TruncatedSimplicialSet& x) {
    if (x.truncation() < 3)
        throw PreconditionError("P construction needs truncation >= 3");
    if (auto bad = face_pair_bijection(x, 3, 1, 1, 2))
        throw PreconditionError("not 2-Segal: " + *bad);
    if (auto bad = face_pair_bijection(x, 2, 0, 0, 1))
        throw PreconditionError("not 2-Segal: " + *bad);

    DoubleCategory d;
    for (std::size_t e = 0; e < x.level_size(1); ++e)
        d.add_object(x.descriptor(1, e).dump());
    for (std::size_t t = 0; t < x.level_size(2); ++t) {
        const auto id = x.descriptor(2, t).dump();
        d.add_hor(id, x.face(2, 2, t), x.face(2, 1, t));
        d.add_ver(id, x.face(2, 1, t), x.face(2, 0, t));
    }
    for (std::size_t e = 0; e < x.level_size(1); ++e) {
        d.hor().set_identity(e, x.degeneracy(1, 1, e));
        d.ver().set_identity(e, x.degeneracy(1, 0, e));
    }
    for (std::size_t w = 0; w < x.level_size(3); ++w) {
        d.hor().set_composite(x.face(3, 3, w), x.face(3, 1, w), x.face(3, 2, w));
        d.ver().set_composite(x.face(3, 2, w), x.face(3, 0, w), x.face(3, 1, w));
        d.add_square(x.descriptor(3, w).dump(), x.face(3, 1, w), x.face(3, 0, w), x.face(3, 3, w),
                     x.face(3, 2, w));
    }
    if (x.level_size(0) == 1)
        d.set_point(x.degeneracy(0, 0, 0));
    return d;
}

// ------------------------------------------------------------- comparisons

std::optional<std::string> check_double_isomorphism(const DoubleCategory& a, const DoubleCategory& b,
                                                    const DoubleFunctorMaps& maps) {
    auto bijective = [](const std::vector<std::size_t>& m, std::size_t from, std::size_t to,
                        const std::string& sort) -> std::optional<std::string> {
        if (m.size() != from || from != to)
            return sort + ": sizes " + std::to_string(from) + " and " + std::to_string(to) + " differ";
        std::set<std::size_t> image(m.begin(), m.end());
        if (image.size() != m.size() || (!image.empty() && *image.rbegin() >= to))
            return sort + ": map is not a bijection";
        return std::nullopt;
    };
    if (auto p = bijective(maps.objects, a.objects().size(), b.objects().size(), "objects"))
        return p;
    if (auto p = bijective(maps.hor, a.hor().morphisms().size(), b.hor().morphisms().size(), "horizontal"))
        return p;
    if (auto p = bijective(maps.ver, a.ver().morphisms().size(), b.ver().morphisms().size(), "vertical"))
        return p;
    if (auto p = bijective(maps.squares, a.squares().size(), b.squares().size(), "squares"))
        return p;
    if (auto p = check_category_isomorphism(a.hor(), b.hor(), maps.objects, maps.hor))
        return "horizontal: " + *p;
    if (auto p = check_category_isomorphism(a.ver(), b.ver(), maps.objects, maps.ver))
        return "vertical: " + *p;
    for (std::size_t s = 0; s < a.squares().size(); ++s) {
        const auto& x = a.squares()[s];
        const auto& y = b.squares()[maps.squares[s]];
        if (y.top != maps.hor[x.top] || y.bottom != maps.hor[x.bottom] || y.left != maps.ver[x.left] ||
            y.right != maps.ver[x.right])
            return "square " + x.id + " boundary is not preserved";
    }
    if (a.point().has_value() != b.point().has_value() || (a.point() && maps.objects[*a.point()] != *b.point()))
        return "point is not preserved";
    return std::nullopt;
}

UnitComparison unit_comparison(const TruncatedSimplicialSet& x) {
    if (x.level_size(0) != 1)
        throw PreconditionError("unit comparison needs a reduced simplicial set");
    const auto d = p_construction(x);
    UnitComparison out{s_construction(d, x.truncation()), {}, {}};
    const int n_max = x.truncation();
    out.map.resize(static_cast<std::size_t>(n_max + 1));
    for (int n = 0; n <= n_max; ++n) {
        for (std::size_t sigma = 0; sigma < x.level_size(n); ++sigma) {
            StaircaseDiagram st(n);
            auto face = [&](std::vector<int> values) {
                return apply_operator(x, MonotoneMap(n, std::move(values)), sigma);
            };
            for (int i = 0; i <= n; ++i)
                for (int j = i; j <= n; ++j) {
                    st.object(i, j) = face({i, j});
                    if (j < n)
                        st.hor(i, j) = face({i, j, j + 1});
                    if (i < j)
                        st.ver(i, j) = face({i, i + 1, j});
                    if (i < j && j < n)
                        st.cell(i, j) = face({i, i + 1, j, j + 1});
                }
            const auto idx = out.s_of_p.find(n, describe(d, st));
            if (!idx) {
                out.report = {false, "simplex " + x.descriptor(n, sigma).dump() + " has no staircase image", n, {}};
                return out;
            }
            out.map[static_cast<std::size_t>(n)].push_back(*idx);
        }
    }
    out.report = levelwise_isomorphic(x, out.s_of_p, out.map);
    return out;
}

CounitComparison counit_comparison(const DoubleCategory& d) {
    const auto s = s_construction(d, 3);
    CounitComparison out{p_construction(s), {}, std::nullopt};
    const auto unset = TruncatedSimplicialSet::kUnset;
    auto assign = [&](std::vector<std::size_t>& slot, std::size_t from, std::size_t to,
                      const std::string& sort) {
        if (slot[from] != unset && !out.problem)
            out.problem = sort + " " + std::to_string(from) + " is hit by two diagrams";
        slot[from] = to;
    };
    out.maps.objects.assign(d.objects().size(), unset);
    out.maps.hor.assign(d.hor().morphisms().size(), unset);
    out.maps.ver.assign(d.ver().morphisms().size(), unset);
    out.maps.squares.assign(d.squares().size(), unset);
    for (std::size_t k = 0; k < s.level_size(1); ++k)
        assign(out.maps.objects, staircase_from(d, s.descriptor(1, k)).object(0, 1), k, "object");
    for (std::size_t k = 0; k < s.level_size(2); ++k) {
        const auto st = staircase_from(d, s.descriptor(2, k));
        assign(out.maps.hor, st.hor(0, 1), k, "horizontal morphism");
        assign(out.maps.ver, st.ver(0, 2), k, "vertical morphism");
    }
    for (std::size_t k = 0; k < s.level_size(3); ++k)
        assign(out.maps.squares, staircase_from(d, s.descriptor(3, k)).cell(0, 2), k, "square");
    for (const auto* m : {&out.maps.objects, &out.maps.hor, &out.maps.ver, &out.maps.squares})
        if (!out.problem && std::find(m->begin(), m->end(), unset) != m->end())
            out.problem = "some cell of D is not reached by any diagram";
    if (!out.problem)
        out.problem = check_double_isomorphism(d, out.p_of_s, out.maps);
    return out;
}

// ---------------------------------------------------------------- fixtures

namespace {

void fill_unit_composites(FiniteCategory& c) {
    const auto& m = c.morphisms();
    for (std::size_t f = 0; f < m.size(); ++f) {
        c.set_composite(c.identity(m[f].source), f, f);
        c.set_composite(f, c.identity(m[f].target), f);
    }
}

}  // namespace

DoubleCategory w2_double_category() {
    DoubleCategory d;
    for (const auto* name : {"*", "01", "02", "12"})
        d.add_object(name);
    for (std::size_t a = 0; a < 4; ++a) {
        d.hor().set_identity(a, d.add_hor("1h_" + d.objects()[a], a, a));
        d.ver().set_identity(a, d.add_ver("1v_" + d.objects()[a], a, a));
    }
    const std::size_t pt = 0, o01 = 1, o02 = 2, o12 = 3;
    const auto a = d.add_hor("*>01", pt, o01);
    const auto b = d.add_hor("01>02", o01, o02);
    const auto ab = d.add_hor("*>02", pt, o02);
    const auto c = d.add_hor("*>12", pt, o12);
    const auto x = d.add_ver("01>>*", o01, pt);
    const auto y = d.add_ver("02>>12", o02, o12);
    const auto z = d.add_ver("12>>*", o12, pt);
    const auto yz = d.add_ver("02>>*", o02, pt);
    fill_unit_composites(d.hor());
    fill_unit_composites(d.ver());
    d.hor().set_composite(a, b, ab);
    d.ver().set_composite(y, z, yz);
    d.add_square("sigma", b, c, x, y);
    d.add_identity_squares();
    d.set_point(pt);
    return d;
}

DoubleCategory trivial_double_category() {
    DoubleCategory d;
    d.add_object("*");
    d.hor().set_identity(0, d.add_hor("1h_*", 0, 0));
    d.ver().set_identity(0, d.add_ver("1v_*", 0, 0));
    fill_unit_composites(d.hor());
    fill_unit_composites(d.ver());
    d.add_identity_squares();
    d.set_point(0);
    return d;
}

// -------------------------------------------------------------------- JSON

DoubleCategory double_category_from_json(const nlohmann::json& j) {
    try {
        DoubleCategory d;
        for (const auto& o : j.at("objects"))
            d.add_object(o.get<std::string>());
        auto object = [&](const nlohmann::json& name) {
            auto found = d.hor().find_object(name.get<std::string>());
            if (!found)
                throw InputError("unknown object " + name.dump());
            return *found;
        };
        auto morphism = [&](const FiniteCategory& c, const nlohmann::json& id) {
            auto found = c.find_morphism(id.get<std::string>());
            if (!found)
                throw InputError("unknown morphism " + id.dump());
            return *found;
        };
        for (const auto& m : j.at("hor"))
            d.add_hor(m.at("id").get<std::string>(), object(m.at("src")), object(m.at("tgt")));
        for (const auto& m : j.at("ver"))
            d.add_ver(m.at("id").get<std::string>(), object(m.at("src")), object(m.at("tgt")));
        for (const auto& [obj, id] : j.at("hor_id").items())
            d.hor().set_identity(object(obj), morphism(d.hor(), id));
        for (const auto& [obj, id] : j.at("ver_id").items())
            d.ver().set_identity(object(obj), morphism(d.ver(), id));
        fill_unit_composites(d.hor());
        fill_unit_composites(d.ver());
        for (const auto& t : j.value("hor_comp", nlohmann::json::array()))
            d.hor().set_composite(morphism(d.hor(), t.at(0)), morphism(d.hor(), t.at(1)), morphism(d.hor(), t.at(2)));
        for (const auto& t : j.value("ver_comp", nlohmann::json::array()))
            d.ver().set_composite(morphism(d.ver(), t.at(0)), morphism(d.ver(), t.at(1)), morphism(d.ver(), t.at(2)));
        for (const auto& s : j.at("squares"))
            d.add_square(s.at("id").get<std::string>(), morphism(d.hor(), s.at("top")),
                         morphism(d.hor(), s.at("bottom")), morphism(d.ver(), s.at("left")),
                         morphism(d.ver(), s.at("right")));
        if (j.value("identity_squares", "") == "auto")
            d.add_identity_squares();
        if (j.contains("point") && !j.at("point").is_null())
            d.set_point(object(j.at("point")));
        return d;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed double category: ") + e.what());
    }
}

nlohmann::json to_json(const DoubleCategory& d) {
    nlohmann::json j;
    j["objects"] = d.objects();
    j["point"] = d.point() ? nlohmann::json(d.objects()[*d.point()]) : nlohmann::json(nullptr);
    auto arrows = [&](const FiniteCategory& c) {
        auto out = nlohmann::json::array();
        for (const auto& m : c.morphisms())
            out.push_back({{"id", m.id}, {"src", d.objects()[m.source]}, {"tgt", d.objects()[m.target]}});
        return out;
    };
    auto composites = [&](const FiniteCategory& c) {
        auto out = nlohmann::json::array();
        const auto& m = c.morphisms();
        for (std::size_t f = 0; f < m.size(); ++f)
            for (std::size_t g = 0; g < m.size(); ++g)
                if (m[f].target == m[g].source)
                    out.push_back({m[f].id, m[g].id, m[c.compose(f, g)].id});
        return out;
    };
    auto identities = [&](const FiniteCategory& c) {
        auto out = nlohmann::json::object();
        for (std::size_t a = 0; a < d.objects().size(); ++a)
            out[d.objects()[a]] = c.morphisms()[c.identity(a)].id;
        return out;
    };
    j["hor"] = arrows(d.hor());
    j["ver"] = arrows(d.ver());
    j["hor_comp"] = composites(d.hor());
    j["ver_comp"] = composites(d.ver());
    j["hor_id"] = identities(d.hor());
    j["ver_id"] = identities(d.ver());
    auto squares = nlohmann::json::array();
    const auto& hm = d.hor().morphisms();
    const auto& vm = d.ver().morphisms();
    for (const auto& s : d.squares())
        squares.push_back({{"id", s.id},
                           {"top", hm[s.top].id},
                           {"bottom", hm[s.bottom].id},
                           {"left", vm[s.left].id},
                           {"right", vm[s.right].id}});
    j["squares"] = squares;
    return j;
}

}  // namespace segal
