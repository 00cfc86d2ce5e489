#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "segal/simplicial.hpp"

namespace segal {

using Coefficient = boost::multiprecision::cpp_int;

/// Sparse element of a Hall algebra: basis index -> nonzero coefficient.
using HallElement = std::map<std::size_t, Coefficient>;

/// The Hall algebra of a reduced, levelwise-finite simplicial set. Basis
/// index x is the 1-simplex x of the source set.
class HallAlgebra {
public:
    std::size_t dimension() const { return basis_.size(); }
    const std::vector<Descriptor>& basis() const { return basis_; }
    std::size_t unit() const { return unit_; }

    /// g^z_{xy}: number of 2-simplices with (d_2, d_1, d_0) = (x, z, y).
    Coefficient constant(std::size_t x, std::size_t y, std::size_t z) const;
    /// x . y as a sparse sum over z.
    const HallElement& product(std::size_t x, std::size_t y) const;

    HallElement basis_element(std::size_t x) const;

    friend HallAlgebra hall_algebra(const TruncatedSimplicialSet& x);

private:
    std::vector<Descriptor> basis_;
    std::size_t unit_ = 0;
    std::vector<std::vector<HallElement>> table_;  // table_[x][y]
};

/// Scans X_2. Requires |X_0| = 1 and truncation >= 2; does not re-check
/// the 2-Segal condition.
HallAlgebra hall_algebra(const TruncatedSimplicialSet& x);

/// Bilinear extension of the structure constants.
HallElement multiply(const HallAlgebra& a, const HallElement& u, const HallElement& v);

struct LawReport {
    std::string law;
    bool holds = true;
    std::vector<std::size_t> witness;  // basis indices of the failing pair/triple
};

LawReport check_associative(const HallAlgebra& a);
LawReport check_unital(const HallAlgebra& a);
LawReport check_commutative(const HallAlgebra& a);

enum class TableFormat { text, csv, json };
TableFormat parse_table_format(const std::string& name);

/// Full |basis|^2 multiplication table, rows = left factor, basis in
/// descriptor order.
std::string export_table(const HallAlgebra& a, TableFormat format);

/// Short human-readable name for a basis descriptor.
std::string basis_label(const Descriptor& d);

nlohmann::json to_json(const HallAlgebra& a, const LawReport& r);

}  // namespace segal
