// segal: build simplicial sets from combinatorial data, check Segal
// conditions, print Hall algebras, run the S / P constructions.
//
// Exit codes: 0 all requested properties hold, 1 a property failed,
// 2 bad input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "segal/double_category.hpp"
#include "segal/graph.hpp"
#include "segal/hall.hpp"
#include "segal/nerve.hpp"
#include "segal/segal_check.hpp"
#include "segal/simplicial.hpp"
#include "segal/tree.hpp"

using namespace segal;
using nlohmann::json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInput = 2;

struct Options {
    std::string input;
    std::string output;
    std::string kind;
    int truncation = -1;
    int n = -1;
    bool human = false;

    bool validate = false, segal1 = false, segal2 = false, criterion = false;

    std::string table = "text";
    std::string laws = "assoc,unital";
    bool skip_precheck = false;
};

int default_truncation() {
    if (const char* env = std::getenv("SEGAL_MAX_LEVEL")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw InputError(std::string("SEGAL_MAX_LEVEL is not an integer: ") + env);
        }
    }
    return 5;
}

int truncation(const Options& o) {
    const int n = o.truncation >= 0 ? o.truncation : default_truncation();
    if (n < 0)
        throw InputError("truncation must be non-negative");
    return n;
}

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

void emit(const Options& o, const std::string& text) {
    if (o.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(o.output);
    if (!out)
        throw InputError("cannot write " + o.output);
    out << text;
}

void print_report(const Options& o, const json& report) {
    if (!o.human) {
        std::cout << report.dump(2) << "\n";
        return;
    }
    for (const auto& [key, value] : report.items())
        std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
}

TruncatedSimplicialSet read_sset(const Options& o) {
    return simplicial_set_from_json(read_json(o.input));
}

// ------------------------------------------------------------------- build

TruncatedSimplicialSet build(const Options& o) {
    const int n_max = truncation(o);
    const auto& kind = o.kind;
    if (kind == "simplex" || kind == "spine") {
        if (o.n < 0)
            throw InputError("--n is required for " + kind);
        if (kind == "spine" && o.n < 1)
            throw InputError("spine needs --n >= 1");
        return kind == "simplex" ? standard_simplex(o.n, n_max) : spine(o.n, n_max);
    }
    if (o.input.empty())
        throw InputError("an input file is required for " + kind);
    const auto j = read_json(o.input);
    if (kind == "graph")
        return build_XG(multigraph_from_json(j), n_max);
    if (kind == "tree")
        return build_XT(rooted_tree_from_json(j), n_max);
    if (kind == "monoid" || kind == "partial-monoid") {
        const auto m = partial_monoid_from_json(j);
        if (const auto problems = m.problems(); !problems.empty())
            throw InputError(problems.front());
        const auto size = m.elements().size();
        if (kind == "monoid" && m.products().size() != size * size)
            throw InputError("monoid product is not total; use --kind partial-monoid");
        return nerve_partial_monoid(m, n_max);
    }
    if (kind == "double-cat")
        return s_construction(double_category_from_json(j), n_max);
    throw InputError("unknown kind " + kind);
}

int cmd_build(const Options& o) {
    const auto k = build(o);
    const auto report = validate(k);
    if (!report.ok())
        throw InputError("constructed set violates " + report.violations.front().identity);
    if (o.human) {
        std::ostringstream os;
        os << k.label() << " truncated at " << k.truncation() << "\n";
        for (int n = 0; n <= k.truncation(); ++n)
            os << "level " << n << ": " << k.level_size(n) << "\n";
        emit(o, os.str());
    } else {
        emit(o, to_json(k).dump() + "\n");
    }
    return kPass;
}

// ------------------------------------------------------------------- check

json validation_json(const ValidationReport& r) {
    json violations = json::array();
    for (const auto& v : r.violations)
        violations.push_back({{"identity", v.identity}, {"level", v.level}, {"simplex", v.simplex}, {"i", v.i},
                              {"j", v.j}});
    json witness = violations.empty() ? json(nullptr) : violations.front();
    return {{"check", "validate"},
            {"verdict", r.ok() ? "pass" : "fail"},
            {"violations", violations.size()},
            {"witness", witness}};
}

int cmd_check(const Options& o) {
    const int chosen = o.validate + o.segal1 + o.segal2 + o.criterion;
    if (chosen != 1)
        throw InputError("choose exactly one of --validate, --1-segal, --2-segal, --path-criterion");
    const auto k = read_sset(o);
    json report;
    bool pass = false;
    if (o.validate) {
        const auto r = validate(k);
        report = validation_json(r);
        pass = r.ok();
    } else if (o.segal1) {
        const auto r = segal1_check(k);
        report = to_json(k, r);
        pass = r.passed();
    } else if (o.segal2) {
        if (k.truncation() < 3)
            throw InputError("2-Segal check needs truncation >= 3");
        const auto r = segal2_check(k);
        report = to_json(k, r);
        pass = r.passed();
    } else {
        if (k.truncation() < 3)
            throw InputError("path-criterion check needs truncation >= 3");
        const auto r = path_space_criterion_check(k);
        report = to_json(k, r);
        pass = r.segal2.passed() && r.path_spaces_pass();
    }
    print_report(o, report);
    return pass ? kPass : kFail;
}

// -------------------------------------------------------------------- hall

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty())
            out.push_back(item);
    return out;
}

int cmd_hall(const Options& o) {
    const auto k = read_sset(o);
    if (k.truncation() < 2)
        throw InputError("Hall algebra needs truncation >= 2");
    if (k.level_size(0) != 1)
        throw InputError("Hall algebra needs a reduced simplicial set, |X_0| = " + std::to_string(k.level_size(0)));
    TableFormat format;
    try {
        format = parse_table_format(o.table);
    } catch (const PreconditionError& e) {
        throw InputError(e.what());
    }
    std::vector<LawReport (*)(const HallAlgebra&)> checks;
    for (const auto& law : split(o.laws)) {
        if (law == "assoc")
            checks.push_back(check_associative);
        else if (law == "unital")
            checks.push_back(check_unital);
        else if (law == "comm")
            checks.push_back(check_commutative);
        else
            throw InputError("unknown law " + law);
    }

    json report = json::object();
    if (!o.skip_precheck && k.truncation() >= 3) {
        const auto pre = segal2_check(k);
        if (!pre.passed()) {
            report["precheck"] = to_json(k, pre);
            report["verdict"] = "fail";
            print_report(o, report);
            return kFail;
        }
    }
    const auto a = hall_algebra(k);
    const auto table = export_table(a, format);
    if (!o.output.empty())
        emit(o, table);
    else if (o.human)
        std::cout << table;
    else if (format == TableFormat::json)
        report["table"] = json::parse(table);
    else
        report["table"] = table;

    bool pass = true;
    json laws = json::array();
    for (auto check : checks) {
        const auto r = check(a);
        pass = pass && r.holds;
        laws.push_back(to_json(a, r));
    }
    report["laws"] = laws;
    report["verdict"] = pass ? "pass" : "fail";
    if (o.human) {
        for (const auto& l : laws)
            std::cout << l["law"].get<std::string>() << ": " << l["verdict"].get<std::string>()
                      << (l["witness"].is_null() ? "" : " " + l["witness"].dump()) << "\n";
    } else {
        std::cout << report.dump(2) << "\n";
    }
    return pass ? kPass : kFail;
}

// ------------------------------------------------------- S, P, round trips

json problems_json(const std::vector<std::string>& problems) {
    return {{"verdict", problems.empty() ? "pass" : "fail"}, {"problems", problems}};
}

int cmd_sconstruct(const Options& o) {
    const auto d = double_category_from_json(read_json(o.input));
    const auto report = validate_double_category(d);
    if (!report.ok()) {
        print_report(o, problems_json(report.problems));
        return kFail;
    }
    if (!d.point())
        throw InputError("double category has no point");
    if (const auto pointed = check_pointed(d); !pointed.ok) {
        print_report(o, problems_json({pointed.detail}));
        return kFail;
    }
    emit(o, to_json(s_construction(d, truncation(o))).dump() + "\n");
    return kPass;
}

int cmd_pconstruct(const Options& o) {
    const auto k = read_sset(o);
    if (k.truncation() < 3)
        throw InputError("P construction needs truncation >= 3");
    try {
        emit(o, to_json(p_construction(k)).dump() + "\n");
    } catch (const PreconditionError& e) {
        print_report(o, problems_json({e.what()}));
        return kFail;
    }
    return kPass;
}

int cmd_roundtrip(const Options& o) {
    json report;
    bool pass = false;
    if (o.kind == "sset") {
        const auto k = read_sset(o);
        if (k.truncation() < 3 || k.level_size(0) != 1)
            throw InputError("unit comparison needs a reduced set truncated at level >= 3");
        try {
            const auto u = unit_comparison(k);
            pass = u.report.ok;
            report = {{"roundtrip", "unit"},
                      {"levels", k.truncation()},
                      {"verdict", pass ? "pass" : "fail"},
                      {"first_failure_level", u.report.level ? json(*u.report.level) : json(nullptr)},
                      {"reason", u.report.reason}};
        } catch (const PreconditionError& e) {
            report = {{"roundtrip", "unit"}, {"verdict", "fail"}, {"reason", e.what()}};
        }
    } else if (o.kind == "double-cat") {
        const auto d = double_category_from_json(read_json(o.input));
        try {
            const auto c = counit_comparison(d);
            pass = c.ok();
            report = {{"roundtrip", "counit"},
                      {"verdict", pass ? "pass" : "fail"},
                      {"reason", c.problem.value_or("")}};
        } catch (const PreconditionError& e) {
            report = {{"roundtrip", "counit"}, {"verdict", "fail"}, {"reason", e.what()}};
        }
    } else {
        throw InputError("roundtrip --kind must be sset or double-cat");
    }
    print_report(o, report);
    return pass ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite simplicial sets, Segal conditions, Hall algebras and the S / P constructions"};
    app.require_subcommand(1);
    Options o;

    auto* build_cmd = app.add_subcommand("build", "Build a truncated simplicial set and print it as JSON");
    build_cmd->add_option("--kind", o.kind, "graph, tree, monoid, partial-monoid, double-cat, simplex, spine")
        ->required()
        ->check(CLI::IsMember({"graph", "tree", "monoid", "partial-monoid", "double-cat", "simplex", "spine"}));
    build_cmd->add_option("input", o.input, "input JSON");
    build_cmd->add_option("--n", o.n, "dimension for simplex and spine");

    auto* check_cmd = app.add_subcommand("check", "Run one check on a simplicial-set JSON file");
    check_cmd->add_option("input", o.input, "simplicial-set JSON")->required();
    check_cmd->add_flag("--validate", o.validate, "simplicial identities");
    check_cmd->add_flag("--1-segal", o.segal1, "1-Segal condition");
    check_cmd->add_flag("--2-segal", o.segal2, "2-Segal condition, levels 3..N");
    check_cmd->add_flag("--path-criterion", o.criterion, "2-Segal directly and through both path spaces");

    auto* hall_cmd = app.add_subcommand("hall", "Hall algebra table and law checks");
    hall_cmd->add_option("input", o.input, "simplicial-set JSON")->required();
    hall_cmd->add_option("--table", o.table, "text, csv or json");
    hall_cmd->add_option("--laws", o.laws, "comma list of assoc, unital, comm");
    hall_cmd->add_flag("--skip-2segal-check", o.skip_precheck, "do not verify 2-Segal first");

    auto* s_cmd = app.add_subcommand("sconstruct", "S construction of a double category");
    s_cmd->add_option("input", o.input, "double-category JSON")->required();

    auto* p_cmd = app.add_subcommand("pconstruct", "P construction of a 2-Segal set");
    p_cmd->add_option("input", o.input, "simplicial-set JSON")->required();

    auto* rt_cmd = app.add_subcommand("roundtrip", "Verify the unit (sset) or counit (double-cat) comparison");
    rt_cmd->add_option("--kind", o.kind, "sset or double-cat")->required();
    rt_cmd->add_option("input", o.input, "input JSON")->required();

    for (auto* cmd : {build_cmd, check_cmd, hall_cmd, s_cmd, p_cmd, rt_cmd}) {
        cmd->add_flag("--human", o.human, "plain-text report instead of JSON");
        cmd->add_option("-o,--output", o.output, "write the main output to a file");
    }
    for (auto* cmd : {build_cmd, s_cmd})
        cmd->add_option("--truncate,-N", o.truncation, "top level N (default 5, or SEGAL_MAX_LEVEL)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kInput;
    }

    try {
        if (*build_cmd)
            return cmd_build(o);
        if (*check_cmd)
            return cmd_check(o);
        if (*hall_cmd)
            return cmd_hall(o);
        if (*s_cmd)
            return cmd_sconstruct(o);
        if (*p_cmd)
            return cmd_pconstruct(o);
        return cmd_roundtrip(o);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInput;
    } catch (const PreconditionError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInput;
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInput;
    }
}
