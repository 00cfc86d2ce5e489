#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "segal/nerve.hpp"
#include "segal/simplicial.hpp"

namespace segal {

/// A small double category with explicit horizontal and vertical categories
/// and a list of squares. Square composition is not stored; for stable
/// double categories it is recovered from boundaries.
class DoubleCategory {
public:
    struct Square {
        std::string id;
        std::size_t top;     // horizontal
        std::size_t bottom;  // horizontal
        std::size_t left;    // vertical
        std::size_t right;   // vertical
    };

    std::size_t add_object(const std::string& name);
    std::size_t add_hor(std::string id, std::size_t source, std::size_t target);
    std::size_t add_ver(std::string id, std::size_t source, std::size_t target);
    std::size_t add_square(std::string id, std::size_t top, std::size_t bottom, std::size_t left, std::size_t right);
    void remove_square(std::size_t square);
    void set_point(std::size_t object) { point_ = object; }

    FiniteCategory& hor() { return hor_; }
    FiniteCategory& ver() { return ver_; }
    const FiniteCategory& hor() const { return hor_; }
    const FiniteCategory& ver() const { return ver_; }
    const std::vector<std::string>& objects() const { return hor_.objects(); }
    const std::vector<Square>& squares() const { return squares_; }
    const std::optional<std::size_t>& point() const { return point_; }
    std::optional<std::size_t> find_square(const std::string& id) const;

    /// Squares with the given source span (top, left) / target cospan
    /// (bottom, right).
    std::vector<std::size_t> squares_with_span(std::size_t top, std::size_t left) const;
    std::vector<std::size_t> squares_with_cospan(std::size_t bottom, std::size_t right) const;

    /// Adds the identity square of every horizontal and vertical morphism
    /// whose boundary is not yet filled.
    void add_identity_squares();

private:
    FiniteCategory hor_;
    FiniteCategory ver_;
    std::vector<Square> squares_;
    std::optional<std::size_t> point_;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> by_span_;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> by_cospan_;

    void reindex();
};

struct PointedReport {
    bool ok = false;
    std::optional<std::size_t> object;  // an object breaking initiality/terminality
    std::string detail;
};

struct StabilityReport {
    bool ok = true;
    enum class Side { span, cospan } side = Side::span;
    std::size_t hor = 0;  // the offending span/cospan
    std::size_t ver = 0;
    std::size_t fillers = 0;
};

struct DoubleCategoryReport {
    std::vector<std::string> problems;
    bool stable = false;
    std::size_t grids_checked = 0;

    bool ok() const { return problems.empty(); }
};

PointedReport check_pointed(const DoubleCategory& d);
StabilityReport check_stable(const DoubleCategory& d);
/// Both categories, square boundaries, then (when stable) identity squares,
/// unit laws of square composition and interchange over all 2x2 grids.
DoubleCategoryReport validate_double_category(const DoubleCategory& d);

/// Unique square with top h and left v, if any.
std::optional<std::size_t> fill_span(const DoubleCategory& d, std::size_t h, std::size_t v);
std::optional<std::size_t> fill_cospan(const DoubleCategory& d, std::size_t h, std::size_t v);

/// Square with top and bottom f and identity sides.
std::size_t vertical_identity_square(const DoubleCategory& d, std::size_t f);
/// Square with left and right v and identity top and bottom.
std::size_t horizontal_identity_square(const DoubleCategory& d, std::size_t v);

/// alpha then beta side by side (right(alpha) = left(beta)).
std::size_t compose_squares_h(const DoubleCategory& d, std::size_t alpha, std::size_t beta);
/// alpha above beta (bottom(alpha) = top(beta)).
std::size_t compose_squares_v(const DoubleCategory& d, std::size_t alpha, std::size_t beta);

/// The triangular diagram of one S_n simplex. Entries are indexed by (i, j)
/// with 0 <= i <= j <= n:
///   object(i, j)        a_ij, object(i, i) is the point;
///   hor(i, j), j < n    a_ij >-> a_i,j+1;
///   ver(i, j), i < j    a_ij ->> a_i+1,j;
///   cell(i, j), i < j < n   the square with top hor(i, j) and left ver(i, j).
class StaircaseDiagram {
public:
    explicit StaircaseDiagram(int n);

    int n() const { return n_; }
    std::size_t& object(int i, int j) { return at(objects_, i, j); }
    std::size_t& hor(int i, int j) { return at(hor_, i, j); }
    std::size_t& ver(int i, int j) { return at(ver_, i, j); }
    std::size_t& cell(int i, int j) { return at(cells_, i, j); }
    std::size_t object(int i, int j) const { return at(objects_, i, j); }
    std::size_t hor(int i, int j) const { return at(hor_, i, j); }
    std::size_t ver(int i, int j) const { return at(ver_, i, j); }
    std::size_t cell(int i, int j) const { return at(cells_, i, j); }

private:
    std::size_t& at(std::vector<std::size_t>& v, int i, int j);
    std::size_t at(const std::vector<std::size_t>& v, int i, int j) const;

    int n_;
    std::vector<std::size_t> objects_, hor_, ver_, cells_;
};

/// Every S_n diagram, enumerated by top row and filled downward through
/// source spans.
std::vector<StaircaseDiagram> staircases(const DoubleCategory& d, int n);
/// Empty when every arrow and cell of the diagram fits together.
std::optional<std::string> check_staircase(const DoubleCategory& d, const StaircaseDiagram& s);
/// The diagram induced along a monotone map [m] -> [n].
StaircaseDiagram restrict_staircase(const DoubleCategory& d, const StaircaseDiagram& s, const MonotoneMap& alpha);

/// {"objects": rows, "hor": rows, "ver": rows, "cells": rows} of ids, row i
/// listing the entries for increasing j.
Descriptor describe(const DoubleCategory& d, const StaircaseDiagram& s);
StaircaseDiagram staircase_from(const DoubleCategory& d, const Descriptor& desc);

TruncatedSimplicialSet s_construction(const DoubleCategory& d, int truncation);

/// Objects X_1, morphisms X_2, squares X_3; ids are descriptor dumps.
DoubleCategory p_construction(const TruncatedSimplicialSet& x);

struct DoubleFunctorMaps {
    std::vector<std::size_t> objects, hor, ver, squares;
};

std::optional<std::string> check_double_isomorphism(const DoubleCategory& a, const DoubleCategory& b,
                                                    const DoubleFunctorMaps& maps);

struct UnitComparison {
    TruncatedSimplicialSet s_of_p;
    LevelMap map;
    IsomorphismReport report;
};

/// X -> S(P(X)), a_ij = edge {i,j}, arrows and cells = faces of sigma.
UnitComparison unit_comparison(const TruncatedSimplicialSet& x);

struct CounitComparison {
    DoubleCategory p_of_s;
    DoubleFunctorMaps maps;
    std::optional<std::string> problem;

    bool ok() const { return !problem.has_value(); }
};

/// D -> P(S(D)), objects to S_1, morphisms to S_2, squares to S_3 diagrams.
CounitComparison counit_comparison(const DoubleCategory& d);

/// The double category W_2 with its three zero objects identified to "*".
DoubleCategory w2_double_category();
/// One object, identities only.
DoubleCategory trivial_double_category();

DoubleCategory double_category_from_json(const nlohmann::json& j);
nlohmann::json to_json(const DoubleCategory& d);

}  // namespace segal
