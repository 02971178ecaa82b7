// Reference computations used as independent oracles by the tests.  They
// deliberately avoid the library's own algorithms: cyclotomic numbers are
// compared through every complex embedding, classes by naive orbits,
// determinants by the Leibniz formula, ages by the quadratic formula.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "mckay/ade.hpp"
#include "mckay/cyclo.hpp"
#include "mckay/groups.hpp"

namespace oracle {

using Complex = std::complex<double>;

/// sum_i c_i w^i with w = exp(2 pi i k / N), straight from the stored coefficients.
inline Complex embed(const mckay::CycNum& x, std::uint64_t k) {
  const double n = x.conductor();
  Complex sum = 0.0;
  const auto c = x.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double angle = 2.0 * M_PI * static_cast<double>((k * i) % x.conductor()) / n;
    sum += c[i].get_d() * Complex(std::cos(angle), std::sin(angle));
  }
  return sum;
}

/// Embedding of x into Q(zeta_L) for L a multiple of its conductor, under zeta_L -> exp(2 pi i k / L).
inline Complex embed_at(const mckay::CycNum& x, std::uint64_t L, std::uint64_t k) {
  return embed(x, (k * (L / x.conductor())) % x.conductor());
}

/// Two cyclotomic numbers agree iff every Galois embedding agrees.
inline bool galois_close(const mckay::CycNum& a, const mckay::CycNum& b, double tol = 1e-8) {
  const std::uint64_t L = std::lcm<std::uint64_t>(a.conductor(), b.conductor());
  for (std::uint64_t k = 1; k <= L; ++k) {
    if (std::gcd(k, L) != 1) continue;
    if (std::abs(embed_at(a, L, k) - embed_at(b, L, k)) > tol) return false;
  }
  return true;
}

inline Complex root(double n, double k) { return {std::cos(2.0 * M_PI * k / n), std::sin(2.0 * M_PI * k / n)}; }

/// Conjugacy classes by direct orbit enumeration, as sorted element sets.
inline std::set<std::set<std::uint32_t>> naive_classes(const mckay::FiniteGroup& g) {
  const std::size_t n = g.order();
  auto mul = [&](std::uint32_t a, std::uint32_t b) { return g.cayley()[a * n + b]; };
  auto inv = [&](std::uint32_t a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      if (mul(a, b) == 0) return b;
    }
    return static_cast<std::uint32_t>(n);
  };
  std::set<std::set<std::uint32_t>> out;
  for (std::uint32_t x = 0; x < n; ++x) {
    std::set<std::uint32_t> orbit;
    for (std::uint32_t h = 0; h < n; ++h) orbit.insert(mul(mul(h, x), inv(h)));
    out.insert(orbit);
  }
  return out;
}

using IntMatrix = std::vector<std::vector<long>>;

/// Adjacency of the finite Dynkin diagram, written out by hand: a path,
/// plus one extra vertex for D (on the second-to-last vertex) and E (on
/// the third vertex).
inline IntMatrix dynkin_adjacency(const mckay::AdeLabel& label) {
  const int n = label.rank;
  IntMatrix a(n, std::vector<long>(n, 0));
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = 1; };
  const int path = label.family == mckay::AdeFamily::A ? n : n - 1;
  for (int i = 0; i + 1 < path; ++i) link(i, i + 1);
  if (label.family == mckay::AdeFamily::D) link(n - 3, n - 1);
  if (label.family == mckay::AdeFamily::E) link(2, n - 1);
  return a;
}

inline IntMatrix negative_cartan(const IntMatrix& adjacency) {
  IntMatrix m = adjacency;
  for (std::size_t i = 0; i < m.size(); ++i) m[i][i] = -2;
  return m;
}

/// Leibniz expansion over all permutations.
inline long leibniz_det(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  long total = 0;
  do {
    long prod = 1;
    for (std::size_t i = 0; i < n && prod != 0; ++i) prod *= m[i][perm[i]];
    if (prod == 0) continue;
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    }
    total += inversions % 2 == 0 ? prod : -prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Age of a finite-order 2x2 matrix from its numerically computed eigenvalues.
inline double numeric_age(const mckay::Matrix2& m) {
  const Complex a = m[0].to_complex(), b = m[1].to_complex(), c = m[2].to_complex(), d = m[3].to_complex();
  const Complex tr = a + d, det = a * d - b * c;
  const Complex disc = std::sqrt(tr * tr - 4.0 * det);
  double age = 0.0;
  for (const Complex lambda : {(tr + disc) / 2.0, (tr - disc) / 2.0}) {
    double theta = std::arg(lambda) / (2.0 * M_PI);
    if (theta < -1e-9) theta += 1.0;
    if (theta < 1e-9) theta = 0.0;
    age += theta;
  }
  return age;
}

}  // namespace oracle
