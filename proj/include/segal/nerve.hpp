#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "segal/simplicial.hpp"

namespace segal {

/// A finite category given by explicit tables.
class FiniteCategory {
public:
    struct Morphism {
        std::string id;
        std::size_t source;
        std::size_t target;
    };

    std::size_t add_object(std::string name);
    std::size_t add_morphism(std::string id, std::size_t source, std::size_t target);
    void set_identity(std::size_t object, std::size_t morphism);
    /// Records g o f, i.e. f first.
    void set_composite(std::size_t f, std::size_t g, std::size_t gf);

    const std::vector<std::string>& objects() const { return objects_; }
    const std::vector<Morphism>& morphisms() const { return morphisms_; }
    std::size_t identity(std::size_t object) const;
    /// g o f; throws PreconditionError when f and g are not composable.
    std::size_t compose(std::size_t f, std::size_t g) const;
    std::optional<std::size_t> find_object(const std::string& name) const;
    std::optional<std::size_t> find_morphism(const std::string& id) const;

    /// Empty when associativity, unit laws and table completeness all hold.
    std::vector<std::string> problems() const;

private:
    std::vector<std::string> objects_;
    std::vector<Morphism> morphisms_;
    std::vector<std::optional<std::size_t>> identity_;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> composite_;
};

/// A set with unit and a product defined on a subset of pairs.
class PartialMonoid {
public:
    PartialMonoid(std::vector<std::string> elements, const std::string& unit);

    void set_product(const std::string& x, const std::string& y, const std::string& xy);

    const std::vector<std::string>& elements() const { return elements_; }
    std::size_t unit() const { return unit_; }
    std::size_t index(const std::string& element) const;
    std::optional<std::size_t> product(std::size_t x, std::size_t y) const;
    const std::map<std::pair<std::size_t, std::size_t>, std::size_t>& products() const { return product_; }

    /// Unit laws and the associativity biconditional over all triples.
    std::vector<std::string> problems() const;

private:
    std::vector<std::string> elements_;
    std::size_t unit_;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> product_;
};

/// Level n: composable chains (f_1, ..., f_n), descriptor the list of ids;
/// level 0: objects, descriptor {"object": name}.
TruncatedSimplicialSet nerve_category(const FiniteCategory& c, int truncation);

/// Level k: composable k-tuples, descriptor the list of elements.
TruncatedSimplicialSet nerve_partial_monoid(const PartialMonoid& m, int truncation);

/// Reads a category off a set whose level-2 Segal map is a bijection.
/// Object and morphism ids are descriptor dumps.
FiniteCategory category_from_1segal(const TruncatedSimplicialSet& k);

/// Verifies that the given object/morphism maps form an isomorphism of
/// categories. Returns the first problem found.
std::optional<std::string> check_category_isomorphism(const FiniteCategory& a, const FiniteCategory& b,
                                                      const std::vector<std::size_t>& objects,
                                                      const std::vector<std::size_t>& morphisms);

/// The poset [n] as a category.
FiniteCategory ordinal_category(int n);
/// Z/k as a one-object category.
FiniteCategory cyclic_group_category(int k);
/// Objects x, y, z with x <= y, x <= z (a poset that is not a chain).
FiniteCategory v_poset_category();

PartialMonoid cyclic_monoid(int k);
/// {1, x} with x.x undefined.
PartialMonoid square_zero_partial_monoid();

PartialMonoid partial_monoid_from_json(const nlohmann::json& j);
nlohmann::json to_json(const PartialMonoid& m);

}  // namespace segal
