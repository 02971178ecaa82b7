#include <doctest.h>

#include <random>

#include "mckay/cyclo.hpp"
#include "mckay/cyclo_matrix.hpp"
#include "oracles.hpp"

using mckay::CycNum;
using mckay::Rational;

namespace {

CycNum z(std::uint32_t n, std::int64_t k = 1) { return CycNum::root_of_unity(n, k); }

CycNum random_element(std::mt19937_64& rng, std::uint32_t conductor) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  std::map<std::int64_t, Rational> terms;
  for (std::uint32_t k = 0; k < conductor; ++k) terms[k] = Rational(coeff(rng), den(rng));
  return CycNum::from_terms(conductor, terms);
}

}  // namespace

TEST_CASE("canonicalize reduces modulo the cyclotomic polynomial") {
  CHECK(CycNum::from_terms(4, {{2, 1}}) == CycNum(-1L));
  CHECK(CycNum::from_terms(3, {{1, 1}, {2, 1}}) == CycNum(-1L));
  CHECK(CycNum::from_terms(1, {{0, 5}}) == CycNum(5L));
  CHECK(CycNum::from_terms(6, {{-1, 1}}) == z(6, 5));
  CHECK_THROWS_AS(CycNum::from_terms(0, {{0, 1}}), std::invalid_argument);
}

TEST_CASE("canonical form agrees with every Galois embedding") {
  for (std::uint32_t n : {5u, 8u, 12u, 15u, 24u}) {
    std::map<std::int64_t, Rational> terms;
    for (std::uint32_t k = 0; k < n; ++k) terms[k] = Rational(static_cast<long>(k * k % 7) - 3, 1 + k % 3);
    const CycNum x = CycNum::from_terms(n, terms);
    CHECK(x.coefficients().size() == mckay::euler_phi(n));
    for (std::uint64_t j = 1; j < n; ++j) {
      if (std::gcd<std::uint64_t>(j, n) != 1) continue;
      oracle::Complex direct = 0.0;
      for (const auto& [k, c] : terms) direct += c.get_d() * oracle::root(n, static_cast<double>(k * j));
      CHECK(std::abs(oracle::embed(x, j) - direct) < 1e-9);
    }
  }
}

TEST_CASE("arithmetic examples") {
  CHECK(z(8) * z(8) == z(4));
  CHECK(z(5).conj() == z(5, 4));
  const CycNum d = z(3) - z(3, 2);
  CHECK(d * d == CycNum(-3L));
  CHECK((z(3) + z(3, 2)).to_rational() == Rational(-1));
  CHECK_FALSE(z(5).to_rational().has_value());
  const CycNum i2 = z(4) - z(4, -1);
  CHECK(i2 * i2 == CycNum(-4L));
}

TEST_CASE("mixed conductors lift to the lcm") {
  const CycNum s = z(3) + z(4);
  CHECK(s.conductor() == 12);
  CHECK(oracle::galois_close(s, z(12, 4) + z(12, 3)));
  CHECK(z(3) * z(4) == z(12, 7));
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(7);
  for (std::uint32_t n : {1u, 3u, 4u, 5u, 7u, 8u, 9u, 12u, 16u, 20u, 24u}) {
    for (int trial = 0; trial < 4; ++trial) {
      const CycNum a = random_element(rng, n), b = random_element(rng, n), c = random_element(rng, n);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a - a).is_zero());
      CHECK(oracle::galois_close(a * b, a * b));
      for (std::uint64_t k = 1; k <= n; ++k) {
        if (std::gcd<std::uint64_t>(k, n) != 1) continue;
        CHECK(std::abs(oracle::embed(a * b, k) - oracle::embed(a, k) * oracle::embed(b, k)) < 1e-8);
        CHECK(std::abs(oracle::embed(a.conj(), k) - std::conj(oracle::embed(a, k))) < 1e-8);
      }
      if (!a.is_zero()) {
        CHECK((a * a.inverse()).is_one());
        CHECK((b / a) * a == b);
      }
    }
  }
}

TEST_CASE("division by zero throws") {
  CHECK_THROWS(CycNum(0L).inverse());
  CHECK_THROWS(z(5) / CycNum(0L));
}

TEST_CASE("integer square roots") {
  CHECK(mckay::integer_sqrt_embed(1) == CycNum(1L));
  CHECK(mckay::integer_sqrt_embed(2) == z(8) + z(8, -1));
  CHECK(oracle::galois_close(mckay::integer_sqrt_embed(5), z(5) - z(5, 2) - z(5, 3) + z(5, 4)));
  for (std::uint64_t n = 1; n <= 200; ++n) {
    const CycNum r = mckay::integer_sqrt_embed(n);
    CHECK(r * r == CycNum(static_cast<long>(n)));
    const oracle::Complex v = oracle::embed(r, 1);
    CHECK(std::abs(v.imag()) < 1e-9);
    CHECK(std::abs(v.real() - std::sqrt(static_cast<double>(n))) < 1e-9);
  }
}

TEST_CASE("lift and lower round trip") {
  const CycNum x = z(5) + Rational(3, 2) * z(5, 3);
  const CycNum up = x.lift_to(40);
  CHECK(up.conductor() == 40);
  CHECK(up == x);
  const auto down = up.lower_to(5);
  REQUIRE(down.has_value());
  CHECK(*down == x);
  CHECK_FALSE(z(8).lower_to(4).has_value());
}

TEST_CASE("exact determinant and rank") {
  mckay::CycMatrix m(2, 2);
  m(0, 0) = z(3);
  m(0, 1) = z(3, 2);
  m(1, 0) = z(3, 2);
  m(1, 1) = z(3);
  CHECK(mckay::determinant(m) == z(3, 2) - z(3, 4));
  CHECK(mckay::rank(m) == 2);
  m(1, 0) = z(3, 2) * z(3);
  m(1, 1) = z(3, 4);
  CHECK(mckay::rank(m) == 1);
}
