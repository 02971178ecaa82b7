// Exact character tables (class-algebra eigenvectors over a prime field,
// lifted to cyclotomic values) and the McKay graph of an SL2 subgroup.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mckay/ade.hpp"
#include "mckay/cyclo.hpp"
#include "mckay/groups.hpp"

namespace mckay {

/// a(i, j, k) = #{(x, y) in C_i x C_j : xy = z} for a fixed z in C_k.
class ClassMultiplicationTensor {
 public:
  explicit ClassMultiplicationTensor(std::size_t classes) : k_(classes), data_(classes * classes * classes, 0) {}

  std::size_t classes() const { return k_; }
  std::uint64_t operator()(std::size_t i, std::size_t j, std::size_t l) const { return data_[(i * k_ + j) * k_ + l]; }
  std::uint64_t& operator()(std::size_t i, std::size_t j, std::size_t l) { return data_[(i * k_ + j) * k_ + l]; }

 private:
  std::size_t k_;
  std::vector<std::uint64_t> data_;
};

ClassMultiplicationTensor class_multiplication_tensor(const FiniteGroup& group, const ConjugacyStructure& classes);

/// Raised when the eigenspace splitting does not terminate or the lifted
/// table fails an exact consistency check.
class CharacterTableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CharacterTableOptions {
  std::uint64_t seed = 0x5eedULL;
  /// Random combinations tried per unsplit eigenspace before giving up.
  int max_attempts = 64;
};

class CharacterTable {
 public:
  const FiniteGroup& group() const { return *group_; }
  std::shared_ptr<const FiniteGroup> group_ptr() const { return group_; }
  const ConjugacyStructure& classes() const { return classes_; }

  std::size_t size() const { return rows_.size(); }
  const CycNum& value(std::size_t irrep, std::size_t cls) const { return rows_[irrep][cls]; }
  std::span<const CycNum> row(std::size_t irrep) const { return rows_[irrep]; }
  long degree(std::size_t irrep) const { return degrees_[irrep]; }
  std::span<const long> degrees() const { return degrees_; }

  /// Trace of the defining 2x2 representation, per class (SL2 groups only).
  const std::optional<std::vector<CycNum>>& natural_character() const { return natural_; }

  /// All values live at this conductor (2 * exponent).
  std::uint32_t conductor() const { return conductor_; }
  /// Prime used for the modular eigenvector computation.
  std::uint64_t prime() const { return prime_; }

 private:
  friend CharacterTable character_table(std::shared_ptr<const FiniteGroup>, const CharacterTableOptions&);

  std::shared_ptr<const FiniteGroup> group_;
  ConjugacyStructure classes_;
  std::vector<std::vector<CycNum>> rows_;
  std::vector<long> degrees_;
  std::optional<std::vector<CycNum>> natural_;
  std::uint32_t conductor_ = 1;
  std::uint64_t prime_ = 0;
};

/// Rows: trivial first, then by degree, then real before non-real (ordered
/// by the first non-real column), then lexicographically by canonical form.
/// Both orthogonality relations are re-verified exactly before returning.
CharacterTable character_table(std::shared_ptr<const FiniteGroup> group, const CharacterTableOptions& options = {});

/// Description of the first violated orthogonality relation, if any.
std::optional<std::string> orthogonality_violation(const CharacterTable& table);

/// (1/|G|) sum_c |C_c| f(c) g(c) conj(h(c)) for class functions f, g, h.
CycNum class_function_product(const CharacterTable& table, std::span<const CycNum> f, std::span<const CycNum> g,
                              std::span<const CycNum> h);

/// Multiplicity of irrep k in irrep i (x) irrep j, certified to be a
/// non-negative integer.
long tensor_multiplicity(const CharacterTable& table, std::size_t i, std::size_t j, std::size_t k);

/// Multiplicity of irrep k in irrep i (x) the natural representation.
long natural_multiplicity(const CharacterTable& table, std::size_t i, std::size_t k);

using IntMatrix = std::vector<std::vector<long>>;

struct DiagramMatch {
  AdeLabel affine;
  AdeLabel finite;
};

class DiagramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matches a connected graph with dimension vector against the affine
/// A/D/E diagrams; deleting `trivial_vertex` gives the finite diagram.
/// Throws DiagramError("not affine ADE") when nothing matches.
DiagramMatch classify_affine_ade(const IntMatrix& adjacency, std::span<const long> dims, std::size_t trivial_vertex = 0);

/// Finite simply-laced Dynkin diagram of a graph; throws DiagramError.
AdeLabel classify_finite_ade(const IntMatrix& adjacency);

struct McKayGraph {
  IntMatrix adjacency;
  std::vector<long> dims;
  std::size_t trivial_vertex = 0;
  DiagramMatch diagram;

  /// Irrep indices other than the trivial vertex, in table order.
  std::vector<std::size_t> finite_vertices() const;
  /// Adjacency restricted to finite_vertices().
  IntMatrix finite_adjacency() const;
};

McKayGraph mckay_graph(const CharacterTable& table);

std::string to_dot(const McKayGraph& graph, const std::string& name = "mckay");

}  // namespace mckay
