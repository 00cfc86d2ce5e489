// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "segal/double_category.hpp"
#include "segal/graph.hpp"
#include "segal/hall.hpp"
#include "segal/nerve.hpp"
#include "segal/segal_check.hpp"
#include "segal/tree.hpp"

using namespace segal;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream note;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            if (!pass)
                note << "; ";
            note << what;
            pass = false;
        }
    }
};

struct SuiteInput {
    std::string name;
    std::function<TruncatedSimplicialSet(int)> build;
    enum class Family { graph, tree, nerve, staircase } family;
};

std::vector<SuiteInput> suite() {
    using F = SuiteInput::Family;
    return {
        {"X^G(edge)", [](int n) { return build_XG(edge_graph(), n); }, F::graph},
        {"X^G(loop)", [](int n) { return build_XG(loop_graph(), n); }, F::graph},
        {"X^G(double edge)", [](int n) { return build_XG(parallel_edges_graph(2), n); }, F::graph},
        {"X^G(path3)", [](int n) { return build_XG(path_graph(3), n); }, F::graph},
        {"X^G(triangle)", [](int n) { return build_XG(triangle_graph(), n); }, F::graph},
        {"X^T(a->b)", [](int n) { return build_XT(two_vertex_tree(), n); }, F::tree},
        {"X^T(a->b->c)", [](int n) { return build_XT(path_tree(), n); }, F::tree},
        {"X^T(cherry)", [](int n) { return build_XT(cherry_tree(), n); }, F::tree},
        {"N(Z/2)", [](int n) { return nerve_category(cyclic_group_category(2), n); }, F::nerve},
        {"N(Z/3)", [](int n) { return nerve_category(cyclic_group_category(3), n); }, F::nerve},
        {"N({1,x})", [](int n) { return nerve_partial_monoid(square_zero_partial_monoid(), n); }, F::nerve},
        {"S(W_2)", [](int n) { return s_construction(w2_double_category(), n); }, F::staircase},
    };
}

std::size_t basis_index(const HallAlgebra& a, const Descriptor& d) {
    for (std::size_t x = 0; x < a.dimension(); ++x)
        if (a.basis()[x] == d)
            return x;
    throw std::runtime_error("missing basis element " + d.dump());
}

Descriptor graph_piece(std::vector<std::string> v, std::vector<std::string> e) {
    std::vector<int> b(v.size(), 1);
    return {{"v", v}, {"e", e.empty() ? Descriptor::array() : Descriptor(e)}, {"b", b}};
}

Descriptor tree_piece(std::vector<std::string> v) {
    std::vector<int> b(v.size(), 1);
    return {{"v", v}, {"b", b}};
}

bool only_unit_products(const HallAlgebra& a, std::size_t skip_x = SIZE_MAX, std::size_t skip_y = SIZE_MAX) {
    for (std::size_t x = 0; x < a.dimension(); ++x)
        for (std::size_t y = 0; y < a.dimension(); ++y) {
            if (x == a.unit() || y == a.unit() || x == y)
                continue;
            if ((x == skip_x && y == skip_y) || (x == skip_y && y == skip_x))
                continue;
            if (!a.product(x, y).empty())
                return false;
        }
    return true;
}

// --------------------------------------------------------------- criteria

void c1(Outcome& o) {
    const auto k = build_XG(edge_graph(), 2);
    o.expect(k.level_size(1) == 5, "|X_1| != 5");
    const auto a = hall_algebra(k);
    const auto x = basis_index(a, graph_piece({"a"}, {}));
    const auto y = basis_index(a, graph_piece({"b"}, {}));
    const HallElement expected{{basis_index(a, graph_piece({"a", "b"}, {})), 1},
                               {basis_index(a, graph_piece({"a", "b"}, {"e"})), 1}};
    o.expect(a.product(x, y) == expected, "a.b");
    o.expect(a.product(y, x) == expected, "b.a");
    o.expect(only_unit_products(a, x, y), "another product of distinct nonempty elements is nonzero");
    o.expect(check_unital(a).holds, "unit law");
}

void c2(Outcome& o) {
    const auto k = build_XG(loop_graph(), 2);
    o.expect(k.level_size(1) == 3, "|X_1| != 3");
    const auto a = hall_algebra(k);
    for (std::size_t x = 0; x < a.dimension(); ++x)
        for (std::size_t y = 0; y < a.dimension(); ++y)
            if (x != a.unit() && y != a.unit())
                o.expect(a.product(x, y).empty(), "nonzero off-unit product");
}

void c3(Outcome& o) {
    for (int n = 1; n <= 3; ++n) {
        const auto a = hall_algebra(build_XG(parallel_edges_graph(n), 2));
        const auto p = a.product(basis_index(a, graph_piece({"a"}, {})), basis_index(a, graph_piece({"b"}, {})));
        o.expect(p.size() == oracle::power(2, n), "n=" + std::to_string(n) + ": " + std::to_string(p.size()) + " terms");
        for (const auto& [z, c] : p)
            o.expect(c == 1, "coefficient != 1");
    }
}

void c4(Outcome& o) {
    const auto k = build_XT(two_vertex_tree(), 2);
    o.expect(k.level_size(1) == 4, "|X_1| != 4");
    const auto a = hall_algebra(k);
    const auto x = basis_index(a, tree_piece({"a"}));
    const auto y = basis_index(a, tree_piece({"b"}));
    o.expect(a.product(x, y) == HallElement{{basis_index(a, tree_piece({"a", "b"})), 1}}, "a.b != T");
    o.expect(a.product(y, x).empty(), "b.a != 0");
    const auto comm = check_commutative(a);
    o.expect(!comm.holds && comm.witness == std::vector<std::size_t>{x, y}, "commutativity witness");
}

void c5(Outcome& o) {
    for (const auto& in : suite()) {
        const auto start = std::chrono::steady_clock::now();
        const auto k = in.build(5);
        const auto r = segal2_check(k, 3, 5);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        o.expect(r.passed(), in.name + " fails");
        o.expect(secs < 60.0, in.name + " took " + std::to_string(secs) + "s");
    }
}

void c6(Outcome& o) {
    const auto k = build_XG(edge_graph(), 3);
    const auto r = segal1_check(k);
    const bool collision = !r.passed() && r.witness->kind == SegalWitness::Kind::non_injective &&
                           r.witness->simplices.size() == 2 &&
                           k.descriptor(2, r.witness->simplices[0]) ==
                               Descriptor{{"v", {"a", "b"}}, {"e", Descriptor::array()}, {"b", {1, 2}}} &&
                           k.descriptor(2, r.witness->simplices[1]) ==
                               Descriptor{{"v", {"a", "b"}}, {"e", {"e"}}, {"b", {1, 2}}};
    o.expect(collision, "edge graph witness");
    for (const auto& t : {two_vertex_tree(), path_tree(), cherry_tree()}) {
        const auto xt = build_XT(t, 3);
        const auto rt = segal1_check(xt);
        std::vector<std::string> all = t.vertices();
        const auto whole = xt.index_of(1, tree_piece(all));
        o.expect(!rt.passed() && rt.witness->kind == SegalWitness::Kind::non_surjective &&
                     rt.witness->tuple == std::vector<std::size_t>{whole, whole},
                 "tree witness is not (T,T)");
    }
    for (int n = 0; n <= 3; ++n)
        o.expect(segal1_check(standard_simplex(n, 4)).passed(), "Delta[" + std::to_string(n) + "]");
    for (const auto& c : {cyclic_group_category(2), cyclic_group_category(3), v_poset_category(), ordinal_category(2)})
        o.expect(segal1_check(nerve_category(c, 4)).passed(), "category nerve");
}

void c7(Outcome& o) {
    for (const auto& in : suite()) {
        const auto r = path_space_criterion_check(in.build(5));
        o.expect(r.agree(), in.name + " disagrees");
    }
    for (const auto& k : {simplex_boundary(3, 5), simplex_boundary(2, 5)}) {
        const auto r = path_space_criterion_check(k);
        o.expect(r.agree(), k.label() + " disagrees");
    }
}

void c8(Outcome& o) {
    for (const auto& in : suite()) {
        const auto a = hall_algebra(in.build(2));
        o.expect(check_associative(a).holds, in.name + " associativity");
        o.expect(check_unital(a).holds, in.name + " unitality");
        const bool comm = check_commutative(a).holds;
        if (in.family == SuiteInput::Family::graph)
            o.expect(comm, in.name + " not commutative");
        if (in.family == SuiteInput::Family::tree)
            o.expect(!comm, in.name + " commutative");
    }
}

void c9(Outcome& o) {
    const auto p = p_construction(build_XG(edge_graph(), 3));
    o.expect(p.objects().size() == 5, "objects");
    o.expect(p.hor().morphisms().size() == 13, "hor");
    o.expect(p.ver().morphisms().size() == 13, "ver");
    o.expect(p.squares().size() == 25, "squares");
    // sum over subgraphs H of n^|V(H)|
    o.expect(p.squares().size() == oracle::graph_level_size(2, {{0, 1}}, 3), "square count oracle");
    o.expect(check_stable(p).ok, "stability");
    o.expect(check_pointed(p).ok, "pointedness");
    const auto v = validate_double_category(p);
    o.expect(v.ok() && v.grids_checked > 0, "interchange");
    o.note << (o.pass ? std::to_string(v.grids_checked) + " grids" : "");
}

void c10(Outcome& o) {
    o.expect(counit_comparison(w2_double_category()).ok(), "counit W_2");
    o.expect(counit_comparison(p_construction(build_XG(edge_graph(), 3))).ok(), "counit P(X^G(edge))");
    o.expect(unit_comparison(build_XG(edge_graph(), 4)).report.ok, "unit X^G(edge)");
    o.expect(unit_comparison(build_XT(two_vertex_tree(), 4)).report.ok, "unit X^T(a->b)");
    o.expect(unit_comparison(nerve_partial_monoid(square_zero_partial_monoid(), 4)).report.ok, "unit N({1,x})");
}

void c11(Outcome& o) {
    for (const auto& c : {v_poset_category(), cyclic_group_category(2)}) {
        const auto d = category_from_1segal(nerve_category(c, 3));
        std::vector<std::size_t> objects, morphisms;
        for (const auto& x : c.objects())
            objects.push_back(d.find_object(Descriptor{{"object", x}}.dump()).value());
        for (const auto& f : c.morphisms())
            morphisms.push_back(d.find_morphism(Descriptor::array({f.id}).dump()).value());
        const auto problem = check_category_isomorphism(c, d, objects, morphisms);
        o.expect(!problem, problem.value_or(""));
    }
}

void c12(Outcome& o) {
    std::vector<TruncatedSimplicialSet> built;
    for (const auto& in : suite())
        built.push_back(in.build(4));
    for (int n = 0; n <= 3; ++n) {
        built.push_back(standard_simplex(n, 4));
        if (n >= 1)
            built.push_back(spine(n, 4));
    }
    built.push_back(simplex_boundary(3, 4));
    built.push_back(nerve_category(v_poset_category(), 4));
    for (const auto& k : built)
        o.expect(validate(k).ok(), k.label() + " violates an identity");

    const auto k = build_XG(edge_graph(), 4);
    std::size_t checked = 0;
    for (int l = 0; l <= 4; ++l)
        for (int m = 0; m <= 4; ++m)
            for (int n = 0; n <= 4; ++n)
                for (const auto& alpha : monotone_maps(l, m))
                    for (const auto& beta : monotone_maps(m, n))
                        for (std::size_t s = 0; s < k.level_size(n); ++s) {
                            ++checked;
                            if (apply_operator(k, beta.after(alpha), s) !=
                                apply_operator(k, alpha, apply_operator(k, beta, s))) {
                                o.expect(false, "functoriality");
                                return;
                            }
                        }
    for (int n = 2; n <= 6; ++n)
        o.expect(enumerate_triangulations(n).size() == oracle::catalan(n - 1), "Catalan n=" + std::to_string(n));
    if (o.pass)
        o.note << checked << " operator applications";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
        {"C1 edge graph Hall algebra", c1},
        {"C2 loop graph Hall algebra", c2},
        {"C3 parallel edges a.b has 2^n terms", c3},
        {"C4 rooted tree a->b Hall algebra", c4},
        {"C5 2-Segal on the suite, levels 3..5", c5},
        {"C6 1-Segal witnesses and passes", c6},
        {"C7 path space criterion agreement", c7},
        {"C8 Hall algebra laws on the suite", c8},
        {"C9 P(X^G(edge)) counts, stability, interchange", c9},
        {"C10 unit and counit round trips", c10},
        {"C11 category from nerve round trip", c11},
        {"C12 identities, functoriality, Catalan", c12},
    };
    int failures = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            run(o);
        } catch (const std::exception& e) {
            o.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += !o.pass;
        std::cout << (o.pass ? "PASS " : "FAIL ") << name;
        const auto note = o.note.str();
        if (!note.empty())
            std::cout << " (" << note << ")";
        std::cout << " [" << std::fixed;
        std::cout.precision(2);
        std::cout << secs << "s]\n";
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
              << " criteria pass\n";
    return failures == 0 ? 0 : 1;
}
