#include "mckay/resolution.hpp"

#include <stdexcept>

namespace mckay {

std::string curve_label(std::size_t irrep) { return "E[" + std::to_string(irrep) + "]"; }

GradedAlgebra local_resolution_algebra(const McKayGraph& graph) {
  const auto verts = graph.finite_vertices();
  const IntMatrix adj = graph.finite_adjacency();
  std::vector<BasisVector> basis{{"1", 0}};
  for (auto v : verts) basis.push_back({curve_label(v), 1});
  basis.push_back({"[pt]", 2});
  GradedAlgebra a("resolution(" + graph.diagram.finite.to_string() + ")", std::move(basis));
  const std::size_t pt = a.point();

  for (std::size_t b = 0; b < a.dimension(); ++b) a.set_symmetric_product(a.unit(), b, a.element(b));
  for (std::size_t i = 0; i < verts.size(); ++i) {
    a.set_product(i + 1, i + 1, {{pt, CycNum(-2L)}});
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      if (adj[i][j] > 1) {
        throw std::domain_error("McKay graph has a multiple edge between " + curve_label(verts[i]) + " and " +
                                curve_label(verts[j]));
      }
      if (adj[i][j] == 1) a.set_symmetric_product(i + 1, j + 1, {{pt, CycNum(1L)}});
    }
  }
  return a;
}

CycMatrix negative_cartan(const McKayGraph& graph) {
  const IntMatrix adj = graph.finite_adjacency();
  CycMatrix m(adj.size(), adj.size());
  for (std::size_t i = 0; i < adj.size(); ++i) {
    for (std::size_t j = 0; j < adj.size(); ++j) m(i, j) = CycNum(i == j ? -2L : adj[i][j]);
  }
  return m;
}

}  // namespace mckay
