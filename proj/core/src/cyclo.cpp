#include "mckay/cyclo.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace mckay {

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

using Poly = std::vector<std::int64_t>;

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("cyclotomic basis: coefficient overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("cyclotomic basis: coefficient overflow");
  return r;
}

// Exact division of integer polynomials by a monic divisor.
Poly divide_monic(const Poly& num, const Poly& den) {
  Poly rem = num;
  const std::size_t dn = den.size() - 1;
  Poly quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t c = rem[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) rem[i - dn + j] = checked_add(rem[i - dn + j], -checked_mul(c, den[j]));
  }
  return quot;
}

// Only called while CyclotomicBasis::get holds its lock.
Poly cyclotomic_polynomial(std::uint32_t n) {
  static std::unordered_map<std::uint32_t, Poly> memo;
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  // x^n - 1 divided by Phi_d for every proper divisor d.
  Poly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (std::uint32_t d = 1; d < n; ++d) {
    if (n % d == 0) p = divide_monic(p, cyclotomic_polynomial(d));
  }
  memo.emplace(n, p);
  return p;
}

}  // namespace

CyclotomicBasis::CyclotomicBasis(std::uint32_t conductor)
    : conductor_(conductor), dimension_(static_cast<std::uint32_t>(euler_phi(conductor))) {
  polynomial_ = cyclotomic_polynomial(conductor);
  const std::uint32_t d = dimension_;
  powers_.assign(static_cast<std::size_t>(conductor) * d, 0);
  Poly cur(d, 0);
  cur[0] = 1;
  for (std::uint32_t j = 0; j < conductor; ++j) {
    std::copy(cur.begin(), cur.end(), powers_.begin() + static_cast<std::ptrdiff_t>(j) * d);
    // multiply by x and reduce by the monic cyclotomic polynomial
    const std::int64_t top = cur[d - 1];
    for (std::uint32_t i = d - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0) {
      for (std::uint32_t i = 0; i < d; ++i) cur[i] = checked_add(cur[i], -checked_mul(top, polynomial_[i]));
    }
  }
}

std::shared_ptr<const CyclotomicBasis> CyclotomicBasis::get(std::uint32_t conductor) {
  if (conductor == 0) throw std::invalid_argument("cyclotomic conductor must be positive");
  static std::mutex mutex;
  static std::unordered_map<std::uint32_t, std::shared_ptr<const CyclotomicBasis>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(conductor);
  if (it != cache.end()) return it->second;
  std::shared_ptr<const CyclotomicBasis> basis(new CyclotomicBasis(conductor));
  cache.emplace(conductor, basis);
  return basis;
}

CycNum::CycNum() : CycNum(0L) {}

CycNum::CycNum(long value) : basis_(CyclotomicBasis::get(1)), coeffs_{Rational(value)} {}

CycNum::CycNum(const Rational& value) : basis_(CyclotomicBasis::get(1)), coeffs_{value} { coeffs_[0].canonicalize(); }

CycNum::CycNum(std::shared_ptr<const CyclotomicBasis> basis, std::vector<Rational> coeffs)
    : basis_(std::move(basis)), coeffs_(std::move(coeffs)) {}

CycNum CycNum::from_coefficients(std::uint32_t conductor, std::vector<Rational> coeffs) {
  auto basis = CyclotomicBasis::get(conductor);
  if (coeffs.size() != basis->dimension()) throw std::invalid_argument("coefficient vector has wrong length");
  for (auto& c : coeffs) c.canonicalize();
  return CycNum(std::move(basis), std::move(coeffs));
}

CycNum CycNum::from_terms(std::uint32_t conductor, const std::map<std::int64_t, Rational>& terms) {
  auto basis = CyclotomicBasis::get(conductor);
  std::vector<Rational> out(basis->dimension());
  const auto n = static_cast<std::int64_t>(conductor);
  for (const auto& [exp, raw] : terms) {
    if (raw == 0) continue;
    Rational c = raw;
    c.canonicalize();
    const auto j = static_cast<std::uint32_t>(((exp % n) + n) % n);
    const auto pw = basis->power(j);
    for (std::size_t i = 0; i < pw.size(); ++i) {
      if (pw[i] != 0) out[i] += c * pw[i];
    }
  }
  return CycNum(std::move(basis), std::move(out));
}

CycNum CycNum::root_of_unity(std::uint32_t conductor, std::int64_t k) {
  return from_terms(conductor, {{k, Rational(1)}});
}

bool CycNum::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool CycNum::is_one() const {
  if (coeffs_[0] != 1) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c == 0; });
}

std::optional<Rational> CycNum::to_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return std::nullopt;
  }
  return coeffs_[0];
}

CycNum CycNum::lift_to(std::uint32_t target) const {
  const std::uint32_t n = conductor();
  if (target == n) return *this;
  if (target == 0 || target % n != 0) throw std::invalid_argument("lift_to: target conductor is not a multiple");
  auto basis = CyclotomicBasis::get(target);
  std::vector<Rational> out(basis->dimension());
  const std::uint32_t step = target / n;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    const auto pw = basis->power(static_cast<std::uint32_t>((k * step) % target));
    for (std::size_t i = 0; i < pw.size(); ++i) {
      if (pw[i] != 0) out[i] += coeffs_[k] * pw[i];
    }
  }
  return CycNum(std::move(basis), std::move(out));
}

namespace {

// Solves A x = b over Q for A given column-major as `columns`.  Returns
// nullopt if the system is inconsistent.  A must have full column rank.
std::optional<std::vector<Rational>> solve_full_column_rank(std::vector<std::vector<Rational>> columns,
                                                            std::vector<Rational> rhs) {
  const std::size_t rows = rhs.size();
  const std::size_t cols = columns.size();
  // augmented row-major matrix
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m[r][c] = columns[c][r];
    m[r][cols] = rhs[r];
  }
  std::size_t pivot_row = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t p = pivot_row;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[pivot_row]);
    const Rational inv = 1 / m[pivot_row][c];
    for (std::size_t k = c; k <= cols; ++k) m[pivot_row][k] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t k = c; k <= cols; ++k) m[r][k] -= f * m[pivot_row][k];
    }
    pivot_cols.push_back(c);
    ++pivot_row;
  }
  for (std::size_t r = pivot_row; r < rows; ++r) {
    if (m[r][cols] != 0) return std::nullopt;
  }
  if (pivot_cols.size() != cols) throw std::logic_error("solve: matrix is rank deficient");
  std::vector<Rational> x(cols);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = m[i][cols];
  return x;
}

}  // namespace

std::optional<CycNum> CycNum::lower_to(std::uint32_t target) const {
  const std::uint32_t n = conductor();
  if (target == n) return *this;
  if (target == 0 || n % target != 0) throw std::invalid_argument("lower_to: target conductor is not a divisor");
  const auto small = CyclotomicBasis::get(target);
  std::vector<std::vector<Rational>> columns;
  columns.reserve(small->dimension());
  for (std::uint32_t i = 0; i < small->dimension(); ++i) {
    auto img = root_of_unity(target, i).lift_to(n);
    columns.emplace_back(img.coeffs_.begin(), img.coeffs_.end());
  }
  auto x = solve_full_column_rank(std::move(columns), coeffs_);
  if (!x) return std::nullopt;
  return CycNum(small, std::move(*x));
}

std::uint32_t CycNum::common_conductor(const CycNum& a, const CycNum& b) {
  const std::uint32_t n = a.conductor();
  const std::uint32_t m = b.conductor();
  if (n == m) return n;
  return std::lcm(n, m);
}

CycNum& CycNum::operator+=(const CycNum& rhs) {
  const std::uint32_t n = common_conductor(*this, rhs);
  if (conductor() != n) *this = lift_to(n);
  if (rhs.conductor() != n) return *this += rhs.lift_to(n);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (rhs.coeffs_[i] != 0) coeffs_[i] += rhs.coeffs_[i];
  }
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& rhs) {
  const std::uint32_t n = common_conductor(*this, rhs);
  if (conductor() != n) *this = lift_to(n);
  if (rhs.conductor() != n) return *this -= rhs.lift_to(n);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (rhs.coeffs_[i] != 0) coeffs_[i] -= rhs.coeffs_[i];
  }
  return *this;
}

CycNum CycNum::operator-() const {
  CycNum out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycNum operator*(const CycNum& lhs, const CycNum& rhs) {
  if (lhs.conductor() == 1 || rhs.conductor() == 1) {
    const CycNum& scalar = lhs.conductor() == 1 ? lhs : rhs;
    const CycNum& other = lhs.conductor() == 1 ? rhs : lhs;
    CycNum out = other;
    const Rational& s = scalar.coeffs_[0];
    if (s == 0) {
      for (auto& c : out.coeffs_) c = 0;
    } else if (s != 1) {
      for (auto& c : out.coeffs_) {
        if (c != 0) c *= s;
      }
    }
    return out;
  }
  const std::uint32_t n = CycNum::common_conductor(lhs, rhs);
  if (lhs.conductor() != n) return lhs.lift_to(n) * rhs;
  if (rhs.conductor() != n) return lhs * rhs.lift_to(n);

  const auto& basis = *lhs.basis_;
  const std::size_t d = basis.dimension();
  std::vector<Rational> raw(2 * d - 1);
  Rational tmp;
  for (std::size_t i = 0; i < d; ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (rhs.coeffs_[j] == 0) continue;
      mpq_mul(tmp.get_mpq_t(), lhs.coeffs_[i].get_mpq_t(), rhs.coeffs_[j].get_mpq_t());
      raw[i + j] += tmp;
    }
  }
  std::vector<Rational> out(raw.begin(), raw.begin() + static_cast<std::ptrdiff_t>(d));
  for (std::size_t k = d; k < raw.size(); ++k) {
    if (raw[k] == 0) continue;
    const auto pw = basis.power(static_cast<std::uint32_t>(k % n));
    for (std::size_t i = 0; i < d; ++i) {
      if (pw[i] != 0) out[i] += raw[k] * pw[i];
    }
  }
  return CycNum(lhs.basis_, std::move(out));
}

CycNum& CycNum::operator*=(const CycNum& rhs) {
  *this = *this * rhs;
  return *this;
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in cyclotomic field");
  if (conductor() == 1) return CycNum(Rational(1) / coeffs_[0]);
  // Solve a * x = 1 with the multiplication-by-a matrix.
  const std::uint32_t n = conductor();
  const std::uint32_t d = basis_->dimension();
  std::vector<std::vector<Rational>> columns;
  columns.reserve(d);
  for (std::uint32_t i = 0; i < d; ++i) {
    auto img = *this * root_of_unity(n, i);
    columns.emplace_back(img.coeffs_.begin(), img.coeffs_.end());
  }
  std::vector<Rational> one(d);
  one[0] = 1;
  auto x = solve_full_column_rank(std::move(columns), std::move(one));
  if (!x) throw std::logic_error("cyclotomic inverse: inconsistent system");
  return CycNum(basis_, std::move(*x));
}

CycNum& CycNum::operator/=(const CycNum& rhs) {
  *this = *this * rhs.inverse();
  return *this;
}

CycNum CycNum::conj() const {
  const std::uint32_t n = conductor();
  if (n <= 2) return *this;
  std::map<std::int64_t, Rational> terms;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) terms.emplace(static_cast<std::int64_t>(n) - static_cast<std::int64_t>(k), coeffs_[k]);
  }
  return from_terms(n, terms);
}

std::complex<double> CycNum::to_complex() const {
  const std::uint32_t n = conductor();
  long double re = 0, im = 0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    const long double c = coeffs_[k].get_d();
    const long double angle = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(k) / n;
    re += c * std::cos(angle);
    im += c * std::sin(angle);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.conductor() == b.conductor()) return a.coeffs_ == b.coeffs_;
  const std::uint32_t n = CycNum::common_conductor(a, b);
  return a.lift_to(n).coeffs_ == b.lift_to(n).coeffs_;
}

int compare(const CycNum& a, const CycNum& b) {
  if (a.conductor() != b.conductor()) {
    const std::uint32_t n = CycNum::common_conductor(a, b);
    return compare(a.lift_to(n), b.lift_to(n));
  }
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    const int c = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

std::string CycNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  const std::uint32_t n = conductor();
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    if (k == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << '*';
      os << 'z' << n;
      if (k > 1) os << '^' << k;
    }
    first = false;
  }
  return first ? "0" : os.str();
}

namespace {

// Legendre symbol (a/p) for an odd prime p.
int legendre(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  std::uint64_t result = 1, base = a, e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result == 1 ? 1 : -1;
}

CycNum sqrt_prime(std::uint64_t p) {
  if (p == 2) return CycNum::root_of_unity(8, 1) + CycNum::root_of_unity(8, -1);
  const auto n = static_cast<std::uint32_t>(p);
  std::map<std::int64_t, Rational> terms;
  for (std::uint64_t a = 1; a < p; ++a) terms.emplace(static_cast<std::int64_t>(a), Rational(legendre(a, p)));
  CycNum gauss = CycNum::from_terms(n, terms);
  if (p % 4 == 1) return gauss;
  // gauss = i * sqrt(p)
  return -(CycNum::root_of_unity(4, 1) * gauss);
}

}  // namespace

CycNum integer_sqrt_embed(std::uint64_t n) {
  if (n == 0) return CycNum(0L);
  std::uint64_t square_part = 1;
  CycNum result(1L);
  std::uint64_t m = n;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) square_part *= p;
    if (e % 2 == 1) result *= sqrt_prime(p);
  }
  if (m > 1) result *= sqrt_prime(m);
  return result * CycNum(static_cast<long>(square_part));
}

}  // namespace mckay
