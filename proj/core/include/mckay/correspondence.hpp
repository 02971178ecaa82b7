// The correspondence map between the resolution ring and the invariant
// orbifold ring, and the exact checks that it is a ring isomorphism
// respecting the pairings.
//
// All exact checks run on the scaled map Psi = sqrt(|G|) * Phi, whose
// entries s(g) * chi_rho(g) lie in Q(zeta_2e) with e the group exponent.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mckay/algebra.hpp"
#include "mckay/chartab.hpp"
#include "mckay/cyclo_matrix.hpp"
#include "mckay/report.hpp"

namespace mckay {

/// s(g) = zeta_2r^k - zeta_2r^-k where the natural representation has
/// eigenvalues zeta_r^(+-k), 0 < k <= r/2, r = order of g.  Recovered from
/// the natural character of the class.  Throws std::invalid_argument for
/// the identity class.
CycNum branch_sqrt(const CharacterTable& table, std::size_t cls);
/// Same branch, read off the eigenvalues of the element's own matrix.
CycNum element_branch_sqrt(const FiniteGroup& group, FiniteGroup::Element g);

struct CorrespondenceMap {
  /// Row r is the class sum f[classes[r]], column c the curve E[irreps[c]].
  std::vector<std::size_t> classes;
  std::vector<std::size_t> irreps;
  /// Entries s(g) * chi_rho(g).
  CycMatrix matrix;
  /// Psi = sqrt(scale) * Phi.
  std::uint64_t scale = 1;
  std::optional<CycMatrix> exact_unscaled;

  /// Fills exact_unscaled with matrix / sqrt(scale).
  void materialize_unscaled();
};

CorrespondenceMap phi_local(const CharacterTable& table, const McKayGraph& graph);
nlohmann::json to_json(const CorrespondenceMap& map);

/// Determinant of the table with the trivial row and identity column removed.
CycNum char_minor_determinant(const CharacterTable& table);
CheckResult check_minor_determinant(const CharacterTable& table);

/// A linear map S between graded algebras, given on the source basis, that
/// is a rescaling S(b) = sqrt(weights[b]) * F(b) of a candidate ring map F.
struct WeightedMap {
  const GradedAlgebra* source = nullptr;
  const GradedAlgebra* target = nullptr;
  std::vector<AlgebraElement> images;
  std::vector<std::uint64_t> weights;
};

/// sqrt(num / den), rational when possible.
CycNum sqrt_ratio(std::uint64_t num, std::uint64_t den);

/// S(a) S(b) = sum_c (ab)_c sqrt(w_a w_b / w_c) S(c) for all basis pairs,
/// i.e. F(a) F(b) = F(ab).
CheckResult check_multiplicativity(const WeightedMap& map);
/// Full matrix of S has full rank; determinant of the degree-1 block.
CheckResult check_additive_rank(const WeightedMap& map);
/// S^T P S = (sqrt(w_i w_j) G_ij) on the degree-1 blocks, where P and G are
/// the target and source Gram matrices.
CheckResult check_isometry(const WeightedMap& map);
/// The three identities above re-evaluated in double precision.
std::vector<CheckResult> float_checks(const WeightedMap& map, double tolerance = 1e-9);

/// Per element g != id and conjugator h: the row of the class of h g h^-1
/// equals s(g) * chi(g) computed from g itself; also s(g) s(g^-1) = chi_0(g) - 2.
CheckResult check_equivariance(const CharacterTable& table, const CorrespondenceMap& map);
CheckResult float_equivariance(const CharacterTable& table, const CorrespondenceMap& map, double tolerance = 1e-9);

/// Associativity, commutativity, unit, grading and pairing checks, each
/// named "<prefix>.<axiom>".  Nondegeneracy is only a check when
/// `require_nondegenerate` is set; otherwise it is recorded as detail.
std::vector<CheckResult> algebra_axioms(const GradedAlgebra& algebra, const std::string& prefix,
                                        bool require_nondegenerate = true);

struct LocalModel {
  std::string name;
  std::shared_ptr<const FiniteGroup> group;
  std::shared_ptr<const CharacterTable> table;
  McKayGraph graph;
  /// Orbifold ring before invariants.
  GradedAlgebra orbifold;
  GradedAlgebra resolution;
  CorrespondenceMap psi;
  std::map<std::string, double> timings;
};

/// Group, character table, McKay graph, both rings and Psi for an ADE type.
LocalModel build_local_model(const AdeLabel& label, const CharacterTableOptions& options = {});
/// Same for an arbitrary finite subgroup of SL2.
LocalModel build_local_model(std::shared_ptr<const FiniteGroup> group, const CharacterTableOptions& options = {});

/// Psi on the whole resolution ring: identity on 1 and [pt], weights |G| on curves.
WeightedMap local_weighted_map(const LocalModel& model, const GradedAlgebra& invariant);

/// Rebuilds the invariant ring from model.orbifold and runs every check.
VerificationReport verify_local(const LocalModel& model);
VerificationReport verify_local(const AdeLabel& label, const CharacterTableOptions& options = {});

}  // namespace mckay
