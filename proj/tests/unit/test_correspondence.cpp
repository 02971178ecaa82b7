#include <doctest.h>

#include "mckay/correspondence.hpp"
#include "mckay/orbifold.hpp"
#include "mckay/resolution.hpp"
#include "mckay/serialize.hpp"
#include "oracles.hpp"

using namespace mckay;

namespace {

CycNum z(std::uint32_t n, std::int64_t k = 1) { return CycNum::root_of_unity(n, k); }

LocalModel model_of(const char* label) { return build_local_model(AdeLabel::parse(label)); }

}  // namespace

TEST_CASE("branch square roots") {
  const LocalModel a1 = model_of("A1");
  const CycNum s = branch_sqrt(*a1.table, 1);
  CHECK(s == z(4) - z(4, -1));
  CHECK(s * s == CycNum(-4L));

  const LocalModel e8 = model_of("E8");
  const auto& chi = *e8.table->natural_character();
  for (std::size_t c = 1; c < e8.table->classes().size(); ++c) {
    const CycNum b = branch_sqrt(*e8.table, c);
    CHECK(b * b == chi[c] - CycNum(2L));
    CHECK(b == element_branch_sqrt(*e8.group, e8.table->classes().representatives[c]));
    CHECK(oracle::embed(b, 1).imag() > 0);
    if (e8.group->element_order(e8.table->classes().representatives[c]) == 3) {
      CHECK(chi[c] == CycNum(-1L));
      CHECK(b == z(6) - z(6, -1));
      CHECK(b * b == CycNum(-3L));
    }
  }
  CHECK_THROWS_AS(branch_sqrt(*e8.table, 0), std::invalid_argument);
}

TEST_CASE("Psi entries agree with i sqrt(2 - chi_0) chi_rho") {
  for (const char* name : {"A1", "A2", "D5", "E6"}) {
    CAPTURE(name);
    const LocalModel m = model_of(name);
    const auto& chi0 = *m.table->natural_character();
    for (std::size_t r = 0; r < m.psi.classes.size(); ++r) {
      const double t = oracle::embed(chi0[m.psi.classes[r]], 1).real();
      const oracle::Complex s(0.0, std::sqrt(2.0 - t));
      for (std::size_t c = 0; c < m.psi.irreps.size(); ++c) {
        const oracle::Complex expected = s * oracle::embed(m.table->value(m.psi.irreps[c], m.psi.classes[r]), 1);
        CHECK(std::abs(oracle::embed(m.psi.matrix(r, c), 1) - expected) < 1e-9);
      }
    }
  }
}

TEST_CASE("Z/2 and Z/3 entries") {
  LocalModel a1 = model_of("A1");
  REQUIRE(a1.psi.matrix.rows() == 1);
  CHECK(a1.psi.matrix(0, 0) == -(z(4) - z(4, 3)));
  CHECK(a1.psi.scale == 2);
  a1.psi.materialize_unscaled();
  CHECK((*a1.psi.exact_unscaled)(0, 0) == -(z(8) + z(8, 3)));

  LocalModel a2 = model_of("A2");
  a2.psi.materialize_unscaled();
  const CycNum root3 = integer_sqrt_embed(3);
  const CycNum i3 = z(6) - z(6, -1);
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      const CycNum& e = a2.psi.matrix(r, c);
      CHECK((e == i3 * z(3) || e == i3 * z(3, 2)));
      CHECK((*a2.psi.exact_unscaled)(r, c) * root3 == e);
    }
  }
}

TEST_CASE("Psi has full rank") {
  for (const char* name : {"A4", "D6", "E7"}) {
    const LocalModel m = model_of(name);
    CHECK(rank(m.psi.matrix) == m.table->size() - 1);
  }
}

TEST_CASE("character table minors") {
  CHECK(char_minor_determinant(*model_of("A1").table) == CycNum(-1L));
  const CycNum d3 = char_minor_determinant(*model_of("A2").table);
  const CycNum expected = z(3, 2) - z(3);
  CHECK((d3 == expected || d3 == -expected));
  const auto s3 = character_table(resolve_group("S3"));
  CHECK_FALSE(char_minor_determinant(s3).is_zero());
  CHECK(check_minor_determinant(s3).pass);
}

TEST_CASE("sqrt_ratio") {
  CHECK(sqrt_ratio(8, 2) == CycNum(2L));
  CHECK(sqrt_ratio(1, 4) == CycNum(Rational(1, 2)));
  const CycNum h = sqrt_ratio(1, 2);
  CHECK(h * h == CycNum(Rational(1, 2)));
  CHECK(oracle::embed(h, 1).real() > 0);
  CHECK_THROWS(sqrt_ratio(1, 0));
}

TEST_CASE("local verification passes") {
  for (const char* name : {"A1", "A3", "D4", "E6", "E8"}) {
    CAPTURE(name);
    const VerificationReport r = verify_local(AdeLabel::parse(name));
    CHECK(r.pass());
    CHECK(r.diagnostics_pass());
    CHECK(r.checks.size() == 4);
    for (const char* check : {"multiplicativity", "additive-rank", "isometry", "equivariance"}) {
      REQUIRE(r.find(check) != nullptr);
      CHECK(r.find(check)->pass);
    }
    REQUIRE(r.lemma.has_value());
    CHECK(r.lemma->pass);
  }
}

TEST_CASE("tampered orbifold product is caught with a curve witness") {
  LocalModel m = model_of("E8");
  FiniteGroup::Element central = 1;
  while (central < m.group->order() && m.group->inverse(central) != central) ++central;
  REQUIRE(central < m.group->order());
  const std::size_t e = m.orbifold.index_of(sector_label(central));
  m.orbifold.set_product(e, e, scale(m.orbifold.element(m.orbifold.point()), CycNum(2L)));
  const VerificationReport r = verify_local(m);
  CHECK_FALSE(r.pass());
  const CheckResult* mult = r.find("multiplicativity");
  REQUIRE(mult != nullptr);
  CHECK_FALSE(mult->pass);
  const auto& pair = mult->witness.at("pair");
  CHECK(pair[0] == pair[1]);
  CHECK(pair[0].get<std::string>().rfind("E[", 0) == 0);
  CHECK(mult->witness.at("lhs") != mult->witness.at("rhs"));
}

TEST_CASE("tampered resolution product is caught") {
  LocalModel m = model_of("D5");
  const std::size_t curve = m.resolution.index_of(curve_label(m.psi.irreps[1]));
  m.resolution.set_product(curve, curve, scale(m.resolution.element(m.resolution.point()), CycNum(-3L)));
  const VerificationReport r = verify_local(m);
  CHECK_FALSE(r.pass());
  const CheckResult* mult = r.find("multiplicativity");
  CHECK_FALSE(mult->pass);
  CHECK(mult->witness.at("pair") == nlohmann::json::array({curve_label(m.psi.irreps[1]), curve_label(m.psi.irreps[1])}));
  CHECK_FALSE(r.find("isometry")->pass);
}

TEST_CASE("tampered Psi breaks equivariance") {
  LocalModel m = model_of("D4");
  m.psi.matrix(0, 0) = m.psi.matrix(0, 0) * CycNum(2L);
  const CheckResult c = check_equivariance(*m.table, m.psi);
  CHECK_FALSE(c.pass);
  CHECK(c.witness.contains("element"));
}

TEST_CASE("non-invariant orbifold tamper fails without throwing") {
  LocalModel m = model_of("D4");
  FiniteGroup::Element g = 1;
  while (m.table->classes().class_sizes[m.table->classes().class_of[g]] == 1) ++g;
  const std::size_t a = m.orbifold.index_of(sector_label(g));
  const std::size_t b = m.orbifold.index_of(sector_label(m.group->inverse(g)));
  m.orbifold.set_symmetric_product(a, b, m.orbifold.element(a));
  VerificationReport r;
  CHECK_NOTHROW(r = verify_local(m));
  CHECK_FALSE(r.pass());
}

TEST_CASE("algebra axiom witnesses") {
  LocalModel m = model_of("A2");
  GradedAlgebra& res = m.resolution;
  const std::size_t a = res.index_of(curve_label(m.psi.irreps[0]));
  const std::size_t b = res.index_of(curve_label(m.psi.irreps[1]));
  res.set_product(a, b, scale(res.element(res.point()), CycNum(5L)));
  bool found = false;
  for (const auto& c : algebra_axioms(res, "resolution")) {
    if (c.name == "resolution.commutativity") {
      found = true;
      CHECK_FALSE(c.pass);
    }
  }
  CHECK(found);
}
