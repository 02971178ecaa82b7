// Resolution side: the cohomology ring of the minimal resolution over a
// singular point, with one exceptional curve per nontrivial irreducible.
#pragma once

#include <string>

#include "mckay/algebra.hpp"
#include "mckay/chartab.hpp"

namespace mckay {

/// Basis label of the exceptional curve attached to an irrep index.
std::string curve_label(std::size_t irrep);

/// Basis {1} u {E[rho] : rho nontrivial} u {[pt]}: E*E = -2[pt], curves
/// adjacent in the McKay graph meet in [pt], all other products of curves
/// vanish.  Throws std::domain_error on an edge of multiplicity > 1 between
/// nontrivial irreps.
GradedAlgebra local_resolution_algebra(const McKayGraph& graph);

/// -(Cartan matrix) of the finite diagram, in finite_vertices() order.
CycMatrix negative_cartan(const McKayGraph& graph);

}  // namespace mckay
