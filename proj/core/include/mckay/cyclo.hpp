// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// A CycNum stores the coefficients of an element of Q(zeta_N) on the power
// basis {1, zeta_N, ..., zeta_N^(phi(N)-1)}, reduced modulo the N-th
// cyclotomic polynomial.  Operands of different conductor are lifted to the
// lcm of their conductors before any binary operation.
#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mckay {

using Rational = mpq_class;

std::uint64_t euler_phi(std::uint64_t n);

/// Per-conductor reduction data, shared by every CycNum of that conductor.
class CyclotomicBasis {
 public:
  static std::shared_ptr<const CyclotomicBasis> get(std::uint32_t conductor);

  std::uint32_t conductor() const { return conductor_; }
  std::uint32_t dimension() const { return dimension_; }

  /// Coefficients of the N-th cyclotomic polynomial, constant term first.
  const std::vector<std::int64_t>& polynomial() const { return polynomial_; }

  /// Power-basis coordinates of zeta_N^j, for 0 <= j < N.
  std::span<const std::int64_t> power(std::uint32_t j) const {
    return {powers_.data() + static_cast<std::size_t>(j) * dimension_, dimension_};
  }

 private:
  explicit CyclotomicBasis(std::uint32_t conductor);

  std::uint32_t conductor_;
  std::uint32_t dimension_;
  std::vector<std::int64_t> polynomial_;
  std::vector<std::int64_t> powers_;
};

class CycNum {
 public:
  CycNum();
  CycNum(long value);  // NOLINT(google-explicit-constructor)
  CycNum(const Rational& value);  // NOLINT(google-explicit-constructor)

  /// Builds sum_k terms[k] * zeta_N^k.  Exponents are taken modulo N.
  /// Throws std::invalid_argument when conductor == 0.
  static CycNum from_terms(std::uint32_t conductor, const std::map<std::int64_t, Rational>& terms);

  /// zeta_N^k.
  static CycNum root_of_unity(std::uint32_t conductor, std::int64_t k);

  /// Wraps an already-reduced coefficient vector of length phi(N).
  static CycNum from_coefficients(std::uint32_t conductor, std::vector<Rational> coeffs);

  std::uint32_t conductor() const { return basis_->conductor(); }
  std::span<const Rational> coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;

  /// The value if it is rational, i.e. supported on zeta^0 only.
  std::optional<Rational> to_rational() const;

  /// Same element expressed at a multiple of the current conductor.
  CycNum lift_to(std::uint32_t conductor) const;

  /// Same element expressed at a divisor of the current conductor, if it
  /// lives in that subfield.
  std::optional<CycNum> lower_to(std::uint32_t conductor) const;

  CycNum conj() const;
  CycNum inverse() const;

  /// Value under the embedding zeta_N -> exp(2 pi i / N).
  std::complex<double> to_complex() const;

  CycNum& operator+=(const CycNum& rhs);
  CycNum& operator-=(const CycNum& rhs);
  CycNum& operator*=(const CycNum& rhs);
  CycNum& operator/=(const CycNum& rhs);

  friend CycNum operator+(CycNum lhs, const CycNum& rhs) { return lhs += rhs; }
  friend CycNum operator-(CycNum lhs, const CycNum& rhs) { return lhs -= rhs; }
  friend CycNum operator*(const CycNum& lhs, const CycNum& rhs);
  friend CycNum operator/(CycNum lhs, const CycNum& rhs) { return lhs /= rhs; }
  CycNum operator-() const;

  friend bool operator==(const CycNum& a, const CycNum& b);

  /// Lexicographic comparison of coefficient vectors at the common conductor.
  friend int compare(const CycNum& a, const CycNum& b);

  /// Compact human-readable form, e.g. "-1 + 2*z8^3".
  std::string to_string() const;

 private:
  CycNum(std::shared_ptr<const CyclotomicBasis> basis, std::vector<Rational> coeffs);

  static std::uint32_t common_conductor(const CycNum& a, const CycNum& b);

  std::shared_ptr<const CyclotomicBasis> basis_;
  std::vector<Rational> coeffs_;
};

/// sqrt(n) as an element of Q(zeta_4n), built from quadratic Gauss sums.
/// The returned branch is the positive real root.
CycNum integer_sqrt_embed(std::uint64_t n);

}  // namespace mckay
