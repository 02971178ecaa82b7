#include <doctest.h>

#include "mckay/chartab.hpp"
#include "mckay/orbifold.hpp"
#include "oracles.hpp"

using namespace mckay;

TEST_CASE("ages agree with numerically computed eigenvalues") {
  for (const char* name : {"A1", "A2", "A6", "D4", "D7", "E6", "E7", "E8"}) {
    CAPTURE(name);
    const FiniteGroup g = build_binary_polyhedral(AdeLabel::parse(name));
    const auto ages = element_ages(g);
    CHECK(ages[0] == 0);
    for (FiniteGroup::Element a = 0; a < g.order(); ++a) {
      CHECK(std::abs(ages[a].get_d() - oracle::numeric_age(g.matrix(a))) < 1e-9);
      if (a != 0) CHECK(ages[a] == 1);
    }
  }
}

TEST_CASE("age of diag(w, w^2) in Z/3") {
  const FiniteGroup g = build_binary_polyhedral(AdeLabel::parse("A2"));
  for (FiniteGroup::Element a = 1; a < 3; ++a) CHECK(age(g, a) == Rational(1));
  CHECK(age(g, 0) == 0);
}

TEST_CASE("obstruction classes") {
  for (const char* name : {"A1", "A4", "D4", "D6", "E6"}) {
    CAPTURE(name);
    const FiniteGroup g = build_binary_polyhedral(AdeLabel::parse(name));
    for (FiniteGroup::Element a = 0; a < g.order(); ++a) {
      for (FiniteGroup::Element b = 0; b < g.order(); ++b) {
        const ObstructionEntry e = obstruction_class(g, a, b);
        long expected_rank = 0;
        if (a != 0 && b != 0 && g.multiply(a, b) != 0) expected_rank = 1;
        CHECK(e.rank == expected_rank);
        CHECK(e.c == (expected_rank == 0 ? 1 : 0));
      }
    }
  }
}

TEST_CASE("orbifold ring before invariants") {
  const FiniteGroup g = build_binary_polyhedral(AdeLabel::parse("A2"));
  const GradedAlgebra orb = local_orbifold_algebra(g);
  CHECK(orb.dimension() == 4);
  const std::size_t e1 = orb.index_of(sector_label(1)), e2 = orb.index_of(sector_label(2));
  CHECK(equal(orb.product(e1, e2), orb.element(orb.point())));
  CHECK(orb.product(e1, e1).empty());
  const CycMatrix gram = orb.gram_matrix();
  CHECK(gram(0, 0) == CycNum(0L));
  CHECK(gram(0, 1) == CycNum(1L));
  CHECK(gram(1, 0) == CycNum(1L));
  CHECK(gram(1, 1) == CycNum(0L));
  CHECK_FALSE(orb.associativity_violation().has_value());
  CHECK_FALSE(orb.commutativity_violation().has_value());
  CHECK_FALSE(orb.unit_violation().has_value());
  CHECK_FALSE(orb.grading_violation().has_value());
}

TEST_CASE("invariant subring") {
  const auto build = [](const char* name) {
    const FiniteGroup g = build_binary_polyhedral(AdeLabel::parse(name));
    return invariant_subalgebra(local_orbifold_algebra(g), g, conjugacy_structure(g));
  };
  const GradedAlgebra z2 = build("A1");
  CHECK(z2.dimension() == 3);
  CHECK(equal(z2.product(1, 1), z2.element(z2.point())));

  const GradedAlgebra z3 = build("A2");
  CHECK(z3.indices_of_degree(1).size() == 2);

  const FiniteGroup q8 = build_binary_polyhedral(AdeLabel::parse("D4"));
  const ConjugacyStructure cs = conjugacy_structure(q8);
  const GradedAlgebra d4 = invariant_subalgebra(local_orbifold_algebra(q8), q8, cs);
  CHECK(d4.indices_of_degree(1).size() == 4);
  // f[c] f[c'] = |c| [pt] when c' is the class of inverses, 0 otherwise.
  for (std::size_t c = 1; c < cs.size(); ++c) {
    for (std::size_t d = 1; d < cs.size(); ++d) {
      const AlgebraElement p = d4.product(d4.index_of(class_sum_label(c)), d4.index_of(class_sum_label(d)));
      if (cs.class_inverse[c] == d) {
        CHECK(equal(p, scale(d4.element(d4.point()), CycNum(static_cast<long>(cs.class_sizes[c])))));
      } else {
        CHECK(p.empty());
      }
    }
  }
}

TEST_CASE("non-invariant products are rejected") {
  const FiniteGroup g = build_binary_polyhedral(AdeLabel::parse("D4"));
  const ConjugacyStructure cs = conjugacy_structure(g);
  GradedAlgebra orb = local_orbifold_algebra(g);
  FiniteGroup::Element noncentral = 1;
  while (cs.class_sizes[cs.class_of[noncentral]] == 1) ++noncentral;
  const std::size_t a = orb.index_of(sector_label(noncentral));
  const std::size_t b = orb.index_of(sector_label(g.inverse(noncentral)));
  orb.set_symmetric_product(a, b, orb.element(a));
  CHECK_THROWS_AS(invariant_subalgebra(orb, g, cs), std::domain_error);
}
