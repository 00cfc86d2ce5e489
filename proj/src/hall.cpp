#include "segal/hall.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace segal {

Coefficient HallAlgebra::constant(std::size_t x, std::size_t y, std::size_t z) const {
    const auto& p = product(x, y);
    auto it = p.find(z);
    return it == p.end() ? Coefficient{0} : it->second;
}

const HallElement& HallAlgebra::product(std::size_t x, std::size_t y) const {
    if (x >= basis_.size() || y >= basis_.size())
        throw PreconditionError("basis index outside the Hall algebra");
    return table_[x][y];
}

HallElement HallAlgebra::basis_element(std::size_t x) const {
    if (x >= basis_.size())
        throw PreconditionError("basis index outside the Hall algebra");
    return {{x, Coefficient{1}}};
}

HallAlgebra hall_algebra(const TruncatedSimplicialSet& x) {
    if (x.truncation() < 2)
        throw PreconditionError("Hall algebra needs truncation >= 2");
    if (x.level_size(0) != 1)
        throw PreconditionError("Hall algebra needs a reduced simplicial set (|X_0| = 1), got " +
                                std::to_string(x.level_size(0)));
    HallAlgebra a;
    const auto dim = x.level_size(1);
    for (std::size_t e = 0; e < dim; ++e)
        a.basis_.push_back(x.descriptor(1, e));
    a.unit_ = x.degeneracy(0, 0, 0);
    a.table_.assign(dim, std::vector<HallElement>(dim));
    for (std::size_t s = 0; s < x.level_size(2); ++s)
        a.table_[x.face(2, 2, s)][x.face(2, 0, s)][x.face(2, 1, s)] += 1;
    return a;
}

HallElement multiply(const HallAlgebra& a, const HallElement& u, const HallElement& v) {
    HallElement out;
    for (const auto& [x, cx] : u)
        for (const auto& [y, cy] : v)
            for (const auto& [z, g] : a.product(x, y))
                out[z] += cx * cy * g;
    std::erase_if(out, [](const auto& entry) { return entry.second == 0; });
    return out;
}

LawReport check_associative(const HallAlgebra& a) {
    const auto dim = a.dimension();
    for (std::size_t x = 0; x < dim; ++x)
        for (std::size_t y = 0; y < dim; ++y) {
            const auto xy = a.product(x, y);
            for (std::size_t z = 0; z < dim; ++z) {
                const auto left = multiply(a, xy, a.basis_element(z));
                const auto right = multiply(a, a.basis_element(x), a.product(y, z));
                if (left != right)
                    return {"associative", false, {x, y, z}};
            }
        }
    return {"associative", true, {}};
}

LawReport check_unital(const HallAlgebra& a) {
    const auto one = a.unit();
    for (std::size_t y = 0; y < a.dimension(); ++y) {
        const auto expected = a.basis_element(y);
        if (a.product(one, y) != expected || a.product(y, one) != expected)
            return {"unital", false, {one, y}};
    }
    return {"unital", true, {}};
}

LawReport check_commutative(const HallAlgebra& a) {
    for (std::size_t x = 0; x < a.dimension(); ++x)
        for (std::size_t y = x + 1; y < a.dimension(); ++y)
            if (a.product(x, y) != a.product(y, x))
                return {"commutative", false, {x, y}};
    return {"commutative", true, {}};
}

TableFormat parse_table_format(const std::string& name) {
    if (name == "text")
        return TableFormat::text;
    if (name == "csv")
        return TableFormat::csv;
    if (name == "json")
        return TableFormat::json;
    throw PreconditionError("unknown table format " + name);
}

std::string basis_label(const Descriptor& d) {
    auto join = [](const Descriptor& list) {
        std::string out;
        for (const auto& item : list) {
            if (!out.empty())
                out += ",";
            out += item.is_string() ? item.get<std::string>() : item.dump();
        }
        return out;
    };
    if (d.is_object() && d.contains("v") && d.contains("b")) {
        std::string label = "{" + join(d["v"]);
        if (d.contains("e") && !d["e"].empty())
            label += ":" + join(d["e"]);
        return label + "}";
    }
    if (d.is_array())
        return join(d);
    if (d.is_string())
        return d.get<std::string>();
    return d.dump();
}

namespace {

std::vector<std::size_t> descriptor_order(const HallAlgebra& a) {
    std::vector<std::size_t> order(a.dimension());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](auto x, auto y) { return a.basis()[x] < a.basis()[y]; });
    return order;
}

std::vector<std::string> unique_labels(const HallAlgebra& a) {
    std::vector<std::string> labels;
    for (const auto& d : a.basis())
        labels.push_back(basis_label(d));
    std::set<std::string> distinct(labels.begin(), labels.end());
    if (distinct.size() != labels.size())
        for (std::size_t k = 0; k < labels.size(); ++k)
            labels[k] = a.basis()[k].dump();
    return labels;
}

std::string formal_sum(const HallElement& e, const std::vector<std::string>& labels,
                       const std::vector<std::size_t>& order) {
    std::string out;
    for (auto z : order) {
        auto it = e.find(z);
        if (it == e.end())
            continue;
        if (!out.empty())
            out += "+";
        if (it->second != 1)
            out += it->second.str() + "*";
        out += labels[z];
    }
    return out.empty() ? "0" : out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string export_table(const HallAlgebra& a, TableFormat format) {
    const auto order = descriptor_order(a);
    const auto labels = unique_labels(a);
    std::ostringstream os;
    switch (format) {
    case TableFormat::csv: {
        os << "";
        for (auto y : order)
            os << "," << csv_field(labels[y]);
        os << "\n";
        for (auto x : order) {
            os << csv_field(labels[x]);
            for (auto y : order)
                os << "," << csv_field(formal_sum(a.product(x, y), labels, order));
            os << "\n";
        }
        break;
    }
    case TableFormat::text: {
        for (auto x : order)
            for (auto y : order)
                os << labels[x] << " . " << labels[y] << " = " << formal_sum(a.product(x, y), labels, order) << "\n";
        break;
    }
    case TableFormat::json: {
        nlohmann::json basis = nlohmann::json::array();
        for (auto x : order)
            basis.push_back(a.basis()[x]);
        nlohmann::json constants = nlohmann::json::array();
        for (auto x : order)
            for (auto y : order)
                for (auto z : order) {
                    const auto g = a.constant(x, y, z);
                    if (g != 0)
                        constants.push_back({a.basis()[x], a.basis()[y], a.basis()[z], g.convert_to<long long>()});
                }
        os << nlohmann::json{{"basis", basis}, {"constants", constants}}.dump(2) << "\n";
        break;
    }
    }
    return os.str();
}

nlohmann::json to_json(const HallAlgebra& a, const LawReport& r) {
    nlohmann::json witness = nullptr;
    if (!r.holds) {
        witness = nlohmann::json::array();
        for (auto x : r.witness)
            witness.push_back(a.basis()[x]);
    }
    return {{"law", r.law}, {"verdict", r.holds ? "pass" : "fail"}, {"witness", witness}};
}

}  // namespace segal
