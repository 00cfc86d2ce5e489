#include "segal/nerve.hpp"

#include <algorithm>
#include <functional>

#include "segal/segal_check.hpp"

namespace segal {

// ---------------------------------------------------------- FiniteCategory

std::size_t FiniteCategory::add_object(std::string name) {
    if (find_object(name))
        throw InputError("duplicate object " + name);
    objects_.push_back(std::move(name));
    identity_.emplace_back();
    return objects_.size() - 1;
}

std::size_t FiniteCategory::add_morphism(std::string id, std::size_t source, std::size_t target) {
    if (find_morphism(id))
        throw InputError("duplicate morphism " + id);
    if (source >= objects_.size() || target >= objects_.size())
        throw InputError("morphism " + id + " has an unknown endpoint");
    morphisms_.push_back({std::move(id), source, target});
    return morphisms_.size() - 1;
}

void FiniteCategory::set_identity(std::size_t object, std::size_t morphism) {
    identity_.at(object) = morphism;
}

void FiniteCategory::set_composite(std::size_t f, std::size_t g, std::size_t gf) {
    if (f >= morphisms_.size() || g >= morphisms_.size() || gf >= morphisms_.size())
        throw InputError("composition table refers to an unknown morphism");
    composite_[{f, g}] = gf;
}

std::size_t FiniteCategory::identity(std::size_t object) const {
    const auto& id = identity_.at(object);
    if (!id)
        throw InputError("object " + objects_.at(object) + " has no identity");
    return *id;
}

std::size_t FiniteCategory::compose(std::size_t f, std::size_t g) const {
    if (morphisms_.at(f).target != morphisms_.at(g).source)
        throw PreconditionError("morphisms " + morphisms_[f].id + ", " + morphisms_[g].id + " are not composable");
    auto it = composite_.find({f, g});
    if (it == composite_.end())
        throw InputError("missing composite of " + morphisms_[f].id + " then " + morphisms_[g].id);
    return it->second;
}

std::optional<std::size_t> FiniteCategory::find_object(const std::string& name) const {
    auto it = std::find(objects_.begin(), objects_.end(), name);
    if (it == objects_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - objects_.begin());
}

std::optional<std::size_t> FiniteCategory::find_morphism(const std::string& id) const {
    auto it = std::find_if(morphisms_.begin(), morphisms_.end(), [&](const Morphism& m) { return m.id == id; });
    if (it == morphisms_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - morphisms_.begin());
}

std::vector<std::string> FiniteCategory::problems() const {
    std::vector<std::string> out;
    for (std::size_t x = 0; x < objects_.size(); ++x) {
        const auto& id = identity_[x];
        if (!id) {
            out.push_back("object " + objects_[x] + " has no identity");
        } else if (morphisms_[*id].source != x || morphisms_[*id].target != x) {
            out.push_back("identity of " + objects_[x] + " is not an endomorphism");
        }
    }
    if (!out.empty())
        return out;
    for (const auto& [pair, gf] : composite_) {
        const auto& [f, g] = pair;
        if (morphisms_[f].target != morphisms_[g].source)
            out.push_back("composite recorded for non-composable " + morphisms_[f].id + ", " + morphisms_[g].id);
        else if (morphisms_[gf].source != morphisms_[f].source || morphisms_[gf].target != morphisms_[g].target)
            out.push_back("composite of " + morphisms_[f].id + ", " + morphisms_[g].id + " has wrong endpoints");
    }
    for (std::size_t f = 0; f < morphisms_.size(); ++f)
        for (std::size_t g = 0; g < morphisms_.size(); ++g)
            if (morphisms_[f].target == morphisms_[g].source && !composite_.contains({f, g}))
                out.push_back("missing composite of " + morphisms_[f].id + " then " + morphisms_[g].id);
    if (!out.empty())
        return out;
    for (std::size_t f = 0; f < morphisms_.size(); ++f) {
        if (compose(identity(morphisms_[f].source), f) != f || compose(f, identity(morphisms_[f].target)) != f)
            out.push_back("unit law fails at " + morphisms_[f].id);
        for (std::size_t g = 0; g < morphisms_.size(); ++g) {
            if (morphisms_[f].target != morphisms_[g].source)
                continue;
            for (std::size_t h = 0; h < morphisms_.size(); ++h) {
                if (morphisms_[g].target != morphisms_[h].source)
                    continue;
                if (compose(compose(f, g), h) != compose(f, compose(g, h)))
                    out.push_back("associativity fails at " + morphisms_[f].id + ", " + morphisms_[g].id + ", " +
                                  morphisms_[h].id);
            }
        }
    }
    return out;
}

// ----------------------------------------------------------- PartialMonoid

PartialMonoid::PartialMonoid(std::vector<std::string> elements, const std::string& unit)
    : elements_(std::move(elements)), unit_(0) {
    auto sorted = elements_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InputError("duplicate monoid element");
    unit_ = index(unit);
}

std::size_t PartialMonoid::index(const std::string& element) const {
    auto it = std::find(elements_.begin(), elements_.end(), element);
    if (it == elements_.end())
        throw InputError("unknown monoid element " + element);
    return static_cast<std::size_t>(it - elements_.begin());
}

void PartialMonoid::set_product(const std::string& x, const std::string& y, const std::string& xy) {
    product_[{index(x), index(y)}] = index(xy);
}

std::optional<std::size_t> PartialMonoid::product(std::size_t x, std::size_t y) const {
    auto it = product_.find({x, y});
    if (it == product_.end())
        return std::nullopt;
    return it->second;
}

std::vector<std::string> PartialMonoid::problems() const {
    std::vector<std::string> out;
    const auto size = elements_.size();
    for (std::size_t m = 0; m < size; ++m)
        if (product(unit_, m) != m || product(m, unit_) != m)
            out.push_back("unit law fails at " + elements_[m]);
    for (std::size_t a = 0; a < size; ++a)
        for (std::size_t b = 0; b < size; ++b)
            for (std::size_t c = 0; c < size; ++c) {
                std::optional<std::size_t> left;
                if (auto ab = product(a, b))
                    left = product(*ab, c);
                std::optional<std::size_t> right;
                if (auto bc = product(b, c))
                    right = product(a, *bc);
                if (left != right)
                    out.push_back("associativity fails at (" + elements_[a] + ", " + elements_[b] + ", " +
                                  elements_[c] + ")");
            }
    return out;
}

// ------------------------------------------------------------------ nerves

namespace {

struct CategoryNerveModel {
    using Simplex = std::vector<std::size_t>;  // morphisms, or {object} on level 0

    const FiniteCategory& c;

    std::vector<Simplex> simplices(int n) const {
        std::vector<Simplex> out;
        if (n == 0) {
            for (std::size_t x = 0; x < c.objects().size(); ++x)
                out.push_back({x});
            return out;
        }
        Simplex chain;
        std::function<void()> extend = [&] {
            if (static_cast<int>(chain.size()) == n) {
                out.push_back(chain);
                return;
            }
            for (std::size_t f = 0; f < c.morphisms().size(); ++f) {
                if (!chain.empty() && c.morphisms()[chain.back()].target != c.morphisms()[f].source)
                    continue;
                chain.push_back(f);
                extend();
                chain.pop_back();
            }
        };
        extend();
        return out;
    }

    Simplex face(int n, int i, const Simplex& s) const {
        if (n == 1)
            return {i == 0 ? c.morphisms()[s[0]].target : c.morphisms()[s[0]].source};
        Simplex out;
        for (int k = 0; k < n; ++k) {
            if ((i == 0 && k == 0) || (i == n && k == n - 1))
                continue;
            if (i > 0 && i < n && k == i - 1) {
                out.push_back(c.compose(s[static_cast<std::size_t>(k)], s[static_cast<std::size_t>(k + 1)]));
                ++k;
                continue;
            }
            out.push_back(s[static_cast<std::size_t>(k)]);
        }
        return out;
    }

    Simplex degeneracy(int n, int i, const Simplex& s) const {
        if (n == 0)
            return {c.identity(s[0])};
        // object x_i of the chain
        const auto x = i == 0 ? c.morphisms()[s[0]].source : c.morphisms()[s[static_cast<std::size_t>(i - 1)]].target;
        Simplex out = s;
        out.insert(out.begin() + i, c.identity(x));
        return out;
    }

    Descriptor describe(const Simplex& s) const {
        Descriptor d = Descriptor::array();
        for (auto f : s)
            d.push_back(c.morphisms()[f].id);
        return d;
    }
};

// Level 0 and level 1 both hold one-entry payloads; a wrapper keeps them apart.
struct TaggedCategoryNerve {
    struct Simplex {
        int level;
        std::vector<std::size_t> data;
    };

    CategoryNerveModel inner;

    std::vector<Simplex> simplices(int n) const {
        std::vector<Simplex> out;
        for (auto& s : inner.simplices(n))
            out.push_back({n, std::move(s)});
        return out;
    }
    Simplex face(int n, int i, const Simplex& s) const { return {n - 1, inner.face(n, i, s.data)}; }
    Simplex degeneracy(int n, int i, const Simplex& s) const { return {n + 1, inner.degeneracy(n, i, s.data)}; }
    Descriptor describe(const Simplex& s) const {
        if (s.level == 0)
            return {{"object", inner.c.objects()[s.data[0]]}};
        return inner.describe(s.data);
    }
};

struct MonoidNerveModel {
    using Simplex = std::vector<std::size_t>;

    const PartialMonoid& m;

    std::vector<Simplex> simplices(int n) const {
        std::vector<Simplex> out;
        Simplex tuple;
        // prefix product of the tuple so far, for the composability condition
        std::function<void(std::size_t)> extend = [&](std::size_t prefix) {
            if (static_cast<int>(tuple.size()) == n) {
                out.push_back(tuple);
                return;
            }
            for (std::size_t x = 0; x < m.elements().size(); ++x) {
                std::size_t next = x;
                if (!tuple.empty()) {
                    auto p = m.product(prefix, x);
                    if (!p)
                        continue;
                    next = *p;
                }
                tuple.push_back(x);
                extend(next);
                tuple.pop_back();
            }
        };
        extend(m.unit());
        return out;
    }

    Simplex face(int n, int i, const Simplex& s) const {
        Simplex out;
        for (int k = 0; k < n; ++k) {
            if ((i == 0 && k == 0) || (i == n && k == n - 1))
                continue;
            if (i > 0 && i < n && k == i - 1) {
                auto p = m.product(s[static_cast<std::size_t>(k)], s[static_cast<std::size_t>(k + 1)]);
                if (!p)
                    throw InputError("inner face leaves the domain of the partial product");
                out.push_back(*p);
                ++k;
                continue;
            }
            out.push_back(s[static_cast<std::size_t>(k)]);
        }
        return out;
    }

    Simplex degeneracy(int, int i, const Simplex& s) const {
        Simplex out = s;
        out.insert(out.begin() + i, m.unit());
        return out;
    }

    Descriptor describe(const Simplex& s) const {
        Descriptor d = Descriptor::array();
        for (auto x : s)
            d.push_back(m.elements()[x]);
        return d;
    }
};

}  // namespace

TruncatedSimplicialSet nerve_category(const FiniteCategory& c, int truncation) {
    if (auto p = c.problems(); !p.empty())
        throw InputError("invalid category: " + p.front());
    return build_simplicial_set(TaggedCategoryNerve{CategoryNerveModel{c}}, truncation, "nerve");
}

TruncatedSimplicialSet nerve_partial_monoid(const PartialMonoid& m, int truncation) {
    if (auto p = m.problems(); !p.empty())
        throw InputError("invalid partial monoid: " + p.front());
    return build_simplicial_set(MonoidNerveModel{m}, truncation, "nerve");
}

FiniteCategory category_from_1segal(const TruncatedSimplicialSet& k) {
    if (k.truncation() < 2)
        throw PreconditionError("reading a category needs level 2");
    if (auto r = segal1_check(k, 2, 2); !r.passed())
        throw PreconditionError("1-Segal condition fails at level 2");
    FiniteCategory c;
    for (std::size_t x = 0; x < k.level_size(0); ++x)
        c.add_object(k.descriptor(0, x).dump());
    for (std::size_t f = 0; f < k.level_size(1); ++f)
        c.add_morphism(k.descriptor(1, f).dump(), k.face(1, 1, f), k.face(1, 0, f));
    for (std::size_t x = 0; x < k.level_size(0); ++x)
        c.set_identity(x, k.degeneracy(0, 0, x));
    for (std::size_t s = 0; s < k.level_size(2); ++s)
        c.set_composite(k.face(2, 2, s), k.face(2, 0, s), k.face(2, 1, s));
    if (auto p = c.problems(); !p.empty())
        throw InputError("reconstructed category is invalid: " + p.front());
    return c;
}

std::optional<std::string> check_category_isomorphism(const FiniteCategory& a, const FiniteCategory& b,
                                                      const std::vector<std::size_t>& objects,
                                                      const std::vector<std::size_t>& morphisms) {
    auto bijective = [](const std::vector<std::size_t>& f, std::size_t size) {
        if (f.size() != size)
            return false;
        std::vector<bool> seen(size, false);
        for (auto y : f) {
            if (y >= size || seen[y])
                return false;
            seen[y] = true;
        }
        return true;
    };
    if (!bijective(objects, b.objects().size()))
        return "object map is not a bijection";
    if (!bijective(morphisms, b.morphisms().size()))
        return "morphism map is not a bijection";
    for (std::size_t f = 0; f < a.morphisms().size(); ++f) {
        const auto& mf = a.morphisms()[f];
        const auto& image = b.morphisms()[morphisms[f]];
        if (image.source != objects[mf.source] || image.target != objects[mf.target])
            return "morphism " + mf.id + " changes endpoints";
    }
    for (std::size_t x = 0; x < a.objects().size(); ++x)
        if (morphisms[a.identity(x)] != b.identity(objects[x]))
            return "identity of " + a.objects()[x] + " is not preserved";
    for (std::size_t f = 0; f < a.morphisms().size(); ++f)
        for (std::size_t g = 0; g < a.morphisms().size(); ++g)
            if (a.morphisms()[f].target == a.morphisms()[g].source &&
                morphisms[a.compose(f, g)] != b.compose(morphisms[f], morphisms[g]))
                return "composite of " + a.morphisms()[f].id + ", " + a.morphisms()[g].id + " is not preserved";
    return std::nullopt;
}

FiniteCategory ordinal_category(int n) {
    FiniteCategory c;
    for (int i = 0; i <= n; ++i)
        c.add_object(std::to_string(i));
    std::map<std::pair<int, int>, std::size_t> arrow;
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            arrow[{i, j}] = c.add_morphism(std::to_string(i) + "<=" + std::to_string(j), static_cast<std::size_t>(i),
                                           static_cast<std::size_t>(j));
    for (int i = 0; i <= n; ++i) {
        c.set_identity(static_cast<std::size_t>(i), arrow[{i, i}]);
        for (int j = i; j <= n; ++j)
            for (int k = j; k <= n; ++k)
                c.set_composite(arrow[{i, j}], arrow[{j, k}], arrow[{i, k}]);
    }
    return c;
}

FiniteCategory cyclic_group_category(int k) {
    FiniteCategory c;
    c.add_object("*");
    for (int g = 0; g < k; ++g)
        c.add_morphism(std::to_string(g), 0, 0);
    c.set_identity(0, 0);
    for (int f = 0; f < k; ++f)
        for (int g = 0; g < k; ++g)
            c.set_composite(static_cast<std::size_t>(f), static_cast<std::size_t>(g),
                            static_cast<std::size_t>((f + g) % k));
    return c;
}

FiniteCategory v_poset_category() {
    FiniteCategory c;
    const auto x = c.add_object("x");
    const auto y = c.add_object("y");
    const auto z = c.add_object("z");
    const auto ix = c.add_morphism("1x", x, x);
    const auto iy = c.add_morphism("1y", y, y);
    const auto iz = c.add_morphism("1z", z, z);
    const auto xy = c.add_morphism("x<=y", x, y);
    const auto xz = c.add_morphism("x<=z", x, z);
    c.set_identity(x, ix);
    c.set_identity(y, iy);
    c.set_identity(z, iz);
    for (auto f : {ix, iy, iz})
        c.set_composite(f, f, f);
    c.set_composite(ix, xy, xy);
    c.set_composite(xy, iy, xy);
    c.set_composite(ix, xz, xz);
    c.set_composite(xz, iz, xz);
    return c;
}

PartialMonoid cyclic_monoid(int k) {
    std::vector<std::string> elements;
    for (int g = 0; g < k; ++g)
        elements.push_back(std::to_string(g));
    PartialMonoid m(elements, "0");
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            m.set_product(elements[static_cast<std::size_t>(a)], elements[static_cast<std::size_t>(b)],
                          elements[static_cast<std::size_t>((a + b) % k)]);
    return m;
}

PartialMonoid square_zero_partial_monoid() {
    PartialMonoid m({"1", "x"}, "1");
    m.set_product("1", "1", "1");
    m.set_product("1", "x", "x");
    m.set_product("x", "1", "x");
    return m;
}

PartialMonoid partial_monoid_from_json(const nlohmann::json& j) {
    try {
        PartialMonoid m(j.at("elements").get<std::vector<std::string>>(), j.at("unit").get<std::string>());
        for (const auto& p : j.at("products")) {
            if (!p.is_array() || p.size() != 3)
                throw InputError("each product entry is [x, y, x*y]");
            m.set_product(p[0].get<std::string>(), p[1].get<std::string>(), p[2].get<std::string>());
        }
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed partial monoid JSON: ") + e.what());
    }
}

nlohmann::json to_json(const PartialMonoid& m) {
    nlohmann::json products = nlohmann::json::array();
    for (const auto& [pair, xy] : m.products())
        products.push_back({m.elements()[pair.first], m.elements()[pair.second], m.elements()[xy]});
    return {{"elements", m.elements()}, {"unit", m.elements()[m.unit()]}, {"products", products}};
}

}  // namespace segal
