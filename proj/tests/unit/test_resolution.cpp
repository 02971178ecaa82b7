#include <doctest.h>

#include "mckay/chartab.hpp"
#include "mckay/resolution.hpp"
#include "oracles.hpp"

using namespace mckay;

namespace {

McKayGraph graph_of(const AdeLabel& label) {
  return mckay_graph(character_table(std::make_shared<const FiniteGroup>(build_binary_polyhedral(label))));
}

oracle::IntMatrix integral(const CycMatrix& m) {
  oracle::IntMatrix out(m.rows(), std::vector<long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).to_rational()->get_num().get_si();
  }
  return out;
}

long expected_determinant(const AdeLabel& l) {
  switch (l.family) {
    case AdeFamily::A: return l.rank + 1;
    case AdeFamily::D: return 4;
    case AdeFamily::E: return 9 - l.rank;
  }
  return 0;
}

}  // namespace

TEST_CASE("resolution Gram matrix is minus the Cartan matrix") {
  for (const auto& label : standard_ade_corpus()) {
    CAPTURE(label.to_string());
    const McKayGraph graph = graph_of(label);
    const GradedAlgebra res = local_resolution_algebra(graph);
    const oracle::IntMatrix gram = integral(res.gram_matrix());
    CHECK(gram == integral(negative_cartan(graph)));

    const oracle::IntMatrix reference = oracle::negative_cartan(oracle::dynkin_adjacency(label));
    const long det = oracle::leibniz_det(gram);
    CHECK(det == oracle::leibniz_det(reference));
    CHECK(std::abs(det) == expected_determinant(label));

    std::vector<long> degrees, reference_degrees;
    for (std::size_t i = 0; i < gram.size(); ++i) {
      degrees.push_back(std::count(gram[i].begin(), gram[i].end(), 1L));
      reference_degrees.push_back(std::count(reference[i].begin(), reference[i].end(), 1L));
    }
    std::sort(degrees.begin(), degrees.end());
    std::sort(reference_degrees.begin(), reference_degrees.end());
    CHECK(degrees == reference_degrees);
  }
}

TEST_CASE("small resolution rings") {
  const GradedAlgebra a1 = local_resolution_algebra(graph_of(AdeLabel::parse("A1")));
  CHECK(integral(a1.gram_matrix()) == oracle::IntMatrix{{-2}});
  CHECK(a1.dimension() == 3);

  const GradedAlgebra a2 = local_resolution_algebra(graph_of(AdeLabel::parse("A2")));
  CHECK(integral(a2.gram_matrix()) == oracle::IntMatrix{{-2, 1}, {1, -2}});
}

TEST_CASE("resolution ring axioms") {
  const GradedAlgebra e7 = local_resolution_algebra(graph_of(AdeLabel::parse("E7")));
  CHECK_FALSE(e7.associativity_violation().has_value());
  CHECK_FALSE(e7.commutativity_violation().has_value());
  CHECK_FALSE(e7.unit_violation().has_value());
  CHECK_FALSE(e7.grading_violation().has_value());
}

TEST_CASE("double edges are rejected") {
  McKayGraph g = graph_of(AdeLabel::parse("A2"));
  const auto v = g.finite_vertices();
  g.adjacency[v[0]][v[1]] = g.adjacency[v[1]][v[0]] = 2;
  CHECK_THROWS_AS(local_resolution_algebra(g), std::domain_error);
}
