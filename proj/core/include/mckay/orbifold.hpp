// Orbifold side of a surface quotient singularity C^2/G: ages, obstruction
// classes at the isolated fixed point, the orbifold ring before invariants
// and its G-invariant subring.
#pragma once

#include <string>
#include <vector>

#include "mckay/algebra.hpp"
#include "mckay/groups.hpp"

namespace mckay {

/// sum_j (j/r) * mult(j) over the eigenvalues zeta_r^j of the matrix of g.
Rational age(const FiniteGroup& group, FiniteGroup::Element g);
std::vector<Rational> element_ages(const FiniteGroup& group);
/// Age of the class representative (ages are class functions).
Rational class_age(const FiniteGroup& group, const ConjugacyStructure& classes, std::size_t cls);

struct ObstructionEntry {
  /// Virtual rank of the obstruction bundle on the fixed locus of <g, h>.
  long rank = 0;
  /// Top Chern class on the point: 1 iff rank == 0.
  int c = 0;
};

/// rank = age(g) + age(h) + age((gh)^-1) - 2 + dim Fix<g, h>, where the
/// fixed locus is C^2 for g = h = id and the origin otherwise.
/// Throws std::logic_error on a negative or non-integral rank.
ObstructionEntry obstruction_class(const FiniteGroup& group, FiniteGroup::Element g, FiniteGroup::Element h);
/// Same, reusing precomputed element ages.
ObstructionEntry obstruction_class(const FiniteGroup& group, std::span<const Rational> ages, FiniteGroup::Element g,
                                   FiniteGroup::Element h);

/// Basis label of the twisted sector of a nonidentity element.
std::string sector_label(FiniteGroup::Element g);
/// Basis label of the invariant class sum of a nonidentity class.
std::string class_sum_label(std::size_t cls);

/// Basis {1} u {e[g] : g != id} u {[pt]} with e[g] * e[h] = c(g, h) [pt]
/// when gh = id and 0 otherwise.
GradedAlgebra local_orbifold_algebra(const FiniteGroup& group);

/// Subring spanned by 1, [pt] and f[c] = sum_{g in c} e[g] over the
/// nonidentity classes.  Products are obtained by multiplying the class
/// sums inside `algebra`; throws std::domain_error if a product leaves the
/// invariant subspace.
GradedAlgebra invariant_subalgebra(const GradedAlgebra& algebra, const FiniteGroup& group,
                                   const ConjugacyStructure& classes);

}  // namespace mckay
