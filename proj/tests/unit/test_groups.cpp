#include <doctest.h>

#include "mckay/groups.hpp"
#include "oracles.hpp"

using namespace mckay;

TEST_CASE("binary polyhedral orders") {
  CHECK(build_binary_polyhedral(AdeLabel::parse("A1")).order() == 2);
  CHECK(build_binary_polyhedral(AdeLabel::parse("D4")).order() == 8);
  CHECK(build_binary_polyhedral(AdeLabel::parse("E8")).order() == 120);
  for (const auto& label : standard_ade_corpus()) {
    CAPTURE(label.to_string());
    CHECK(build_binary_polyhedral(label).order() == label.group_order());
  }
}

TEST_CASE("A1 is {I, -I}") {
  const FiniteGroup g = build_binary_polyhedral(AdeLabel::parse("A1"));
  const Matrix2 minus{CycNum(-1L), CycNum(0L), CycNum(0L), CycNum(-1L)};
  CHECK(g.matrix(0) == identity_matrix2());
  CHECK(g.matrix(1) == minus);
}

TEST_CASE("matrices form a faithful representation in SL2") {
  for (const char* name : {"A4", "D5", "E6", "E7", "E8"}) {
    CAPTURE(name);
    const FiniteGroup g = build_binary_polyhedral(AdeLabel::parse(name));
    for (FiniteGroup::Element a = 0; a < g.order(); ++a) {
      CHECK(det(g.matrix(a)) == CycNum(1L));
      const oracle::Complex tr = trace(g.matrix(a)).to_complex();
      CHECK(std::abs(tr.imag()) < 1e-12);
      CHECK((a == 0) == (std::abs(tr.real() - 2.0) < 1e-12));
      for (FiniteGroup::Element b = 0; b < g.order(); ++b) {
        CHECK(multiply(g.matrix(a), g.matrix(b)) == g.matrix(g.multiply(a, b)));
      }
    }
  }
}

TEST_CASE("conjugacy classes match naive orbits") {
  const auto check = [](const FiniteGroup& g) {
    const ConjugacyStructure cs = conjugacy_structure(g);
    std::set<std::set<std::uint32_t>> computed;
    for (const auto& c : cs.classes) computed.insert(std::set<std::uint32_t>(c.begin(), c.end()));
    CHECK(computed == oracle::naive_classes(g));
    CHECK(cs.classes[0] == std::vector<FiniteGroup::Element>{0});
    for (std::size_t c = 0; c < cs.size(); ++c) {
      CHECK(cs.class_of[g.inverse(cs.representatives[c])] == cs.class_inverse[c]);
    }
    return cs;
  };
  const ConjugacyStructure d4 = check(build_binary_polyhedral(AdeLabel::parse("D4")));
  std::vector<std::size_t> sizes = d4.class_sizes;
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 1, 2, 2, 2});
  CHECK(check(build_binary_polyhedral(AdeLabel::parse("E8"))).size() == 9);
  CHECK(check(build_binary_polyhedral(AdeLabel::parse("E7"))).size() == 8);
  CHECK(check(build_named_group("S3")).size() == 3);
  CHECK(check(build_named_group("S4")).size() == 5);
  for (std::uint32_t n : {1u, 2u, 5u, 6u}) {
    CHECK(check(build_named_group("Z" + std::to_string(n))).size() == n);
  }
}

TEST_CASE("Cayley table ingestion") {
  const FiniteGroup z2 = group_from_cayley({{0, 1}, {1, 0}});
  CHECK(z2.order() == 2);
  CHECK(z2.inverse(1) == 1);

  const FiniteGroup moved = group_from_cayley({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}});
  CHECK(moved.order() == 3);
  CHECK(moved.multiply(0, 1) == 1);

  // Latin square with identity 0 that is not associative.
  const std::vector<std::vector<std::uint32_t>> bad{
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  try {
    (void)group_from_cayley(bad);
    FAIL("accepted a non-associative table");
  } catch (const GroupError& e) {
    REQUIRE(e.witness().has_value());
    const auto [a, b, c] = *e.witness();
    CHECK(bad[bad[a][b]][c] != bad[a][bad[b][c]]);
  }
  CHECK_THROWS_AS(group_from_cayley({{0, 1}, {1, 1}}), GroupError);
  CHECK_THROWS_AS(group_from_cayley({{1, 0}, {0, 0}}), GroupError);
}

TEST_CASE("generators must have determinant one") {
  const Matrix2 bad{CycNum(2L), CycNum(0L), CycNum(0L), CycNum(1L)};
  CHECK_THROWS_AS(group_from_generators(std::vector<Matrix2>{bad}), GroupError);
}

TEST_CASE("rotation spectrum of the A_n generator") {
  const FiniteGroup g = build_binary_polyhedral(AdeLabel::parse("A2"));
  for (FiniteGroup::Element a = 1; a < g.order(); ++a) {
    const RotationSpectrum s = rotation_spectrum(g, a);
    CHECK(s.order == 3);
    std::uint32_t sum = 0;
    for (const auto& [j, mult] : s.eigen_exponents) sum += j * mult;
    CHECK(sum % 3 == 0);
  }
}
