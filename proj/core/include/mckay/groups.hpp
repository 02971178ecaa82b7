// Fully enumerated finite groups: the ADE subgroups of SL2(C) built by
// closure from matrix generators, and arbitrary groups ingested from a
// Cayley table.
#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mckay/ade.hpp"
#include "mckay/cyclo.hpp"

namespace mckay {

/// Row-major 2x2 matrix {a, b, c, d}.
using Matrix2 = std::array<CycNum, 4>;

Matrix2 multiply(const Matrix2& x, const Matrix2& y);
CycNum det(const Matrix2& m);
CycNum trace(const Matrix2& m);
Matrix2 identity_matrix2();

/// Raised when a table or generator set does not define a group.
class GroupError : public std::runtime_error {
 public:
  explicit GroupError(const std::string& what, std::optional<std::array<std::uint32_t, 3>> witness = std::nullopt)
      : std::runtime_error(what), witness_(witness) {}

  /// For associativity failures: (a, b, c) with (ab)c != a(bc).
  const std::optional<std::array<std::uint32_t, 3>>& witness() const { return witness_; }

 private:
  std::optional<std::array<std::uint32_t, 3>> witness_;
};

class FiniteGroup {
 public:
  using Element = std::uint32_t;

  std::size_t order() const { return order_; }
  const std::string& name() const { return name_; }

  Element multiply(Element a, Element b) const { return cayley_[static_cast<std::size_t>(a) * order_ + b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  Element conjugate(Element g, Element h) const { return multiply(multiply(h, g), inverse(h)); }
  Element power(Element a, std::uint64_t k) const;
  std::uint32_t element_order(Element a) const { return element_order_[a]; }
  std::uint32_t exponent() const { return exponent_; }

  bool has_matrices() const { return !matrices_.empty(); }
  const Matrix2& matrix(Element a) const { return matrices_.at(a); }
  /// Common conductor of all matrix entries (1 without a matrix representation).
  std::uint32_t matrix_conductor() const { return matrix_conductor_; }

  /// Flat order*order table, row a holds a*b.
  std::span<const Element> cayley() const { return cayley_; }

 private:
  friend FiniteGroup make_group(std::vector<FiniteGroup::Element>, std::size_t, std::vector<Matrix2>, std::uint32_t,
                                std::string);

  std::size_t order_ = 0;
  std::string name_;
  std::vector<Element> cayley_;
  std::vector<Element> inverse_;
  std::vector<std::uint32_t> element_order_;
  std::uint32_t exponent_ = 1;
  std::vector<Matrix2> matrices_;
  std::uint32_t matrix_conductor_ = 1;
};

/// Closure of SL2 matrix generators; element 0 is the identity and the rest
/// follow in breadth-first order.  Throws GroupError if a generator does not
/// have determinant 1 or the closure exceeds `max_order` elements.
FiniteGroup group_from_generators(std::span<const Matrix2> generators, std::string name = "matrix group",
                                  std::size_t max_order = 2000);

/// The finite subgroup of SL2(C) of the given ADE type.
FiniteGroup build_binary_polyhedral(const AdeLabel& label);

/// The standard generator matrices used by build_binary_polyhedral.
std::vector<Matrix2> binary_polyhedral_generators(const AdeLabel& label);

/// Validates a Cayley table and builds the group.  The identity is moved to
/// index 0 if it sits elsewhere.  Associativity is checked on all triples
/// for order <= 512 and by Light's test over a generating set above that.
FiniteGroup group_from_cayley(const std::vector<std::vector<std::uint32_t>>& table, std::string name = "cayley group");

/// Small groups used to exercise the character-table code beyond SL2:
/// "S3", "S4", "Alt4" (alternating), "Dih8" (dihedral of order 8), "Q8",
/// "Z<n>".  The names avoid clashing with ADE labels such as A4 or D8.
FiniteGroup build_named_group(const std::string& name);
std::vector<std::string> lemma_corpus_names();

struct ConjugacyStructure {
  std::vector<std::vector<FiniteGroup::Element>> classes;
  std::vector<std::size_t> class_of;
  std::vector<std::size_t> class_inverse;
  std::vector<std::size_t> class_sizes;
  std::vector<FiniteGroup::Element> representatives;
  std::uint32_t exponent = 1;

  std::size_t size() const { return classes.size(); }
};

/// Classes ordered by smallest member; class 0 is {identity}.
ConjugacyStructure conjugacy_structure(const FiniteGroup& group);

/// Eigenvalues of a finite-order matrix in SL2(C) as powers of zeta_r,
/// r = order of the element: exponent j in [0, r) with multiplicity.
struct RotationSpectrum {
  std::uint32_t order = 1;
  std::vector<std::pair<std::uint32_t, int>> eigen_exponents;
};

RotationSpectrum rotation_spectrum(const FiniteGroup& group, FiniteGroup::Element g);

}  // namespace mckay
