// Finite-dimensional graded commutative algebras given by a labelled basis
// (degrees 0, 1, 2) and sparse structure constants.  Both the resolution
// ring and the orbifold ring are instances.
#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mckay/cyclo.hpp"
#include "mckay/cyclo_matrix.hpp"

namespace mckay {

struct BasisVector {
  std::string label;
  int degree = 0;
};

/// Sparse linear combination of basis vectors; zero coefficients are never stored.
using AlgebraElement = std::map<std::size_t, CycNum>;

void add_term(AlgebraElement& x, std::size_t index, const CycNum& coeff);
AlgebraElement scale(const AlgebraElement& x, const CycNum& s);
bool equal(const AlgebraElement& a, const AlgebraElement& b);

class GradedAlgebra {
 public:
  /// Basis must contain exactly one degree-0 vector (the unit) and one
  /// degree-2 vector (the point class).  All products start at zero.
  GradedAlgebra(std::string name, std::vector<BasisVector> basis);

  const std::string& name() const { return name_; }
  std::size_t dimension() const { return basis_.size(); }
  const BasisVector& basis(std::size_t i) const { return basis_[i]; }
  std::size_t index_of(const std::string& label) const;
  std::optional<std::size_t> find(const std::string& label) const;

  std::size_t unit() const { return unit_; }
  std::size_t point() const { return point_; }
  std::vector<std::size_t> indices_of_degree(int degree) const;

  void set_product(std::size_t i, std::size_t j, AlgebraElement value);
  void set_symmetric_product(std::size_t i, std::size_t j, const AlgebraElement& value);
  const AlgebraElement& product(std::size_t i, std::size_t j) const { return products_[i * basis_.size() + j]; }

  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;
  AlgebraElement element(std::size_t i) const { return {{i, CycNum(1L)}}; }

  /// Coefficient of the point class in b_i * b_j over the degree-1 block.
  CycMatrix gram_matrix() const;

  /// First basis triple with (ab)c != a(bc), over all dim^3 triples.
  std::optional<std::array<std::size_t, 3>> associativity_violation() const;
  std::optional<std::array<std::size_t, 2>> commutativity_violation() const;
  /// First basis vector b with 1*b != b or b*1 != b.
  std::optional<std::size_t> unit_violation() const;
  /// First pair whose product has a component outside degree deg(a)+deg(b).
  std::optional<std::array<std::size_t, 2>> grading_violation() const;

  /// label -> label -> label -> coefficient (CycNum JSON).
  nlohmann::json structure_constants_json() const;

 private:
  std::string name_;
  std::vector<BasisVector> basis_;
  std::map<std::string, std::size_t> index_;
  std::vector<AlgebraElement> products_;
  std::size_t unit_ = 0;
  std::size_t point_ = 0;
};

/// Free function form of GradedAlgebra::gram_matrix.
CycMatrix gram_matrix(const GradedAlgebra& algebra);

}  // namespace mckay
