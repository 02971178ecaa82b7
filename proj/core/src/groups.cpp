#include "mckay/groups.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <utility>

namespace mckay {

Matrix2 multiply(const Matrix2& x, const Matrix2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
          x[2] * y[1] + x[3] * y[3]};
}

CycNum det(const Matrix2& m) { return m[0] * m[3] - m[1] * m[2]; }

CycNum trace(const Matrix2& m) { return m[0] + m[3]; }

Matrix2 identity_matrix2() { return {CycNum(1L), CycNum(0L), CycNum(0L), CycNum(1L)}; }

FiniteGroup::Element FiniteGroup::power(Element a, std::uint64_t k) const {
  k %= element_order_[a];
  Element result = 0;
  Element base = a;
  while (k > 0) {
    if (k & 1U) result = multiply(result, base);
    base = multiply(base, base);
    k >>= 1U;
  }
  return result;
}

FiniteGroup make_group(std::vector<FiniteGroup::Element> cayley, std::size_t order, std::vector<Matrix2> matrices,
                       std::uint32_t conductor, std::string name) {
  FiniteGroup g;
  g.order_ = order;
  g.name_ = std::move(name);
  g.cayley_ = std::move(cayley);
  g.matrices_ = std::move(matrices);
  g.matrix_conductor_ = conductor;
  g.inverse_.assign(order, 0);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      if (g.cayley_[a * order + b] == 0) {
        g.inverse_[a] = static_cast<FiniteGroup::Element>(b);
        break;
      }
    }
  }
  g.element_order_.assign(order, 1);
  std::uint32_t exponent = 1;
  for (std::size_t a = 0; a < order; ++a) {
    std::uint32_t k = 1;
    FiniteGroup::Element x = static_cast<FiniteGroup::Element>(a);
    while (x != 0) {
      x = g.cayley_[x * order + a];
      ++k;
    }
    g.element_order_[a] = k;
    exponent = std::lcm(exponent, k);
  }
  g.exponent_ = exponent;
  return g;
}

namespace {

std::string matrix_key(const Matrix2& m, std::uint32_t conductor) {
  std::string key;
  for (const auto& entry : m) {
    const CycNum lifted = entry.lift_to(conductor);
    for (const auto& c : lifted.coefficients()) {
      key += c.get_str();
      key += ',';
    }
    key += ';';
  }
  return key;
}

Matrix2 lift_matrix(const Matrix2& m, std::uint32_t conductor) {
  return {m[0].lift_to(conductor), m[1].lift_to(conductor), m[2].lift_to(conductor), m[3].lift_to(conductor)};
}

}  // namespace

FiniteGroup group_from_generators(std::span<const Matrix2> generators, std::string name, std::size_t max_order) {
  std::uint32_t conductor = 1;
  for (const auto& m : generators) {
    if (!det(m).is_one()) throw GroupError("generator does not have determinant 1");
    for (const auto& e : m) conductor = std::lcm(conductor, e.conductor());
  }
  std::vector<Matrix2> gens;
  for (const auto& m : generators) gens.push_back(lift_matrix(m, conductor));

  std::vector<Matrix2> elements{lift_matrix(identity_matrix2(), conductor)};
  std::unordered_map<std::string, FiniteGroup::Element> index{{matrix_key(elements[0], conductor), 0}};
  std::vector<FiniteGroup::Element> parent{0};
  std::vector<std::size_t> via{0};
  const std::size_t ngen = gens.size();
  std::vector<FiniteGroup::Element> right_mul;  // right_mul[x * ngen + s] = x * gens[s]

  for (std::size_t x = 0; x < elements.size(); ++x) {
    for (std::size_t s = 0; s < ngen; ++s) {
      Matrix2 y = lift_matrix(multiply(elements[x], gens[s]), conductor);
      auto key = matrix_key(y, conductor);
      auto it = index.find(key);
      FiniteGroup::Element yi;
      if (it == index.end()) {
        if (elements.size() >= max_order) throw GroupError("generated group exceeds the maximum order");
        yi = static_cast<FiniteGroup::Element>(elements.size());
        index.emplace(std::move(key), yi);
        elements.push_back(std::move(y));
        parent.push_back(static_cast<FiniteGroup::Element>(x));
        via.push_back(s);
      } else {
        yi = it->second;
      }
      right_mul.push_back(yi);
    }
  }

  // g_j = g_parent(j) * s_j, so g_i g_j = (g_i g_parent(j)) s_j.
  const std::size_t n = elements.size();
  std::vector<FiniteGroup::Element> cayley(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    cayley[i * n] = static_cast<FiniteGroup::Element>(i);
    for (std::size_t j = 1; j < n; ++j) {
      cayley[i * n + j] = right_mul[cayley[i * n + parent[j]] * ngen + via[j]];
    }
  }
  return make_group(std::move(cayley), n, std::move(elements), conductor, std::move(name));
}

std::vector<Matrix2> binary_polyhedral_generators(const AdeLabel& label) {
  const CycNum zero(0L);
  const CycNum half(Rational(1, 2));
  const CycNum i = CycNum::root_of_unity(4, 1);
  // (1 + i + j + k) / 2 in the SU(2) model a + bi + cj + dk -> [[a+bi, c+di], [-c+di, a-bi]]
  const Matrix2 tetra{half * (CycNum(1L) + i), half * (CycNum(1L) + i), half * (i - CycNum(1L)),
                      half * (CycNum(1L) - i)};
  switch (label.family) {
    case AdeFamily::A: {
      const auto r = static_cast<std::uint32_t>(label.rank + 1);
      return {{CycNum::root_of_unity(r, 1), zero, zero, CycNum::root_of_unity(r, -1)}};
    }
    case AdeFamily::D: {
      const auto two_m = static_cast<std::uint32_t>(2 * (label.rank - 2));
      return {{CycNum::root_of_unity(two_m, 1), zero, zero, CycNum::root_of_unity(two_m, -1)},
              {zero, CycNum(1L), CycNum(-1L), zero}};
    }
    case AdeFamily::E:
      break;
  }
  if (label.rank == 6) return {{i, zero, zero, -i}, tetra};
  if (label.rank == 7) return {{CycNum::root_of_unity(8, 1), zero, zero, CycNum::root_of_unity(8, -1)}, tetra};
  // (phi + phi^-1 i + j) / 2 with phi the golden ratio
  const CycNum phi = half * (CycNum(1L) + integer_sqrt_embed(5));
  const CycNum phi_inv = phi - CycNum(1L);
  const Matrix2 icosian{half * (phi + phi_inv * i), half, -half, half * (phi - phi_inv * i)};
  return {tetra, icosian};
}

FiniteGroup build_binary_polyhedral(const AdeLabel& label) {
  const auto gens = binary_polyhedral_generators(label);
  return group_from_generators(gens, label.to_string());
}

namespace {

std::optional<std::array<std::uint32_t, 3>> associativity_witness(const std::vector<std::vector<std::uint32_t>>& t,
                                                                   std::span<const std::uint32_t> middles) {
  const std::size_t n = t.size();
  for (std::uint32_t b : middles) {
    for (std::uint32_t a = 0; a < n; ++a) {
      const std::uint32_t ab = t[a][b];
      for (std::uint32_t c = 0; c < n; ++c) {
        if (t[ab][c] != t[a][t[b][c]]) return std::array<std::uint32_t, 3>{a, b, c};
      }
    }
  }
  return std::nullopt;
}

// Greedy generating set: keep adding the smallest element outside the
// subset generated so far.
std::vector<std::uint32_t> generating_set(const std::vector<std::vector<std::uint32_t>>& t) {
  const std::size_t n = t.size();
  std::vector<char> reached(n, 0);
  std::vector<std::uint32_t> gens;
  for (std::uint32_t cand = 0; cand < n; ++cand) {
    if (reached[cand]) continue;
    gens.push_back(cand);
    std::fill(reached.begin(), reached.end(), 0);
    std::vector<std::uint32_t> members(gens);
    for (auto s : gens) reached[s] = 1;
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (std::uint32_t s : gens) {
        for (std::uint32_t y : {t[members[k]][s], t[s][members[k]]}) {
          if (!reached[y]) {
            reached[y] = 1;
            members.push_back(y);
          }
        }
      }
    }
  }
  return gens;
}

}  // namespace

FiniteGroup group_from_cayley(const std::vector<std::vector<std::uint32_t>>& table, std::string name) {
  const std::size_t n = table.size();
  if (n == 0) throw GroupError("empty Cayley table");
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) throw GroupError("Cayley table is not square (row " + std::to_string(a) + ")");
    for (auto v : table[a]) {
      if (v >= n) throw GroupError("Cayley table entry out of range in row " + std::to_string(a));
    }
  }
  std::optional<std::uint32_t> identity;
  for (std::uint32_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::uint32_t x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
    if (ok) identity = e;
  }
  if (!identity) throw GroupError("Cayley table has no identity element");
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<char> row(n, 0), col(n, 0);
    for (std::size_t b = 0; b < n; ++b) {
      row[table[a][b]] = 1;
      col[table[b][a]] = 1;
    }
    if (std::count(row.begin(), row.end(), 1) != static_cast<std::ptrdiff_t>(n) ||
        std::count(col.begin(), col.end(), 1) != static_cast<std::ptrdiff_t>(n)) {
      throw GroupError("element " + std::to_string(a) + " is not invertible (row or column is not a permutation)");
    }
  }
  std::vector<std::uint32_t> middles;
  if (n <= 512) {
    middles.resize(n);
    std::iota(middles.begin(), middles.end(), 0U);
  } else {
    middles = generating_set(table);
  }
  if (auto w = associativity_witness(table, middles)) {
    const auto [a, b, c] = *w;
    throw GroupError("Cayley table is not associative: (" + std::to_string(a) + "*" + std::to_string(b) + ")*" +
                         std::to_string(c) + " != " + std::to_string(a) + "*(" + std::to_string(b) + "*" +
                         std::to_string(c) + ")",
                     w);
  }
  // relabel so that the identity is element 0
  std::vector<std::uint32_t> relabel(n);
  std::iota(relabel.begin(), relabel.end(), 0U);
  std::swap(relabel[0], relabel[*identity]);
  std::vector<FiniteGroup::Element> cayley(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      cayley[relabel[a] * n + relabel[b]] = relabel[table[a][b]];
    }
  }
  return make_group(std::move(cayley), n, {}, 1, std::move(name));
}

ConjugacyStructure conjugacy_structure(const FiniteGroup& group) {
  const std::size_t n = group.order();
  constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
  ConjugacyStructure cs;
  cs.class_of.assign(n, unassigned);
  for (FiniteGroup::Element g = 0; g < n; ++g) {
    if (cs.class_of[g] != unassigned) continue;
    const std::size_t id = cs.classes.size();
    std::vector<FiniteGroup::Element> members;
    for (FiniteGroup::Element h = 0; h < n; ++h) {
      const auto x = group.conjugate(g, h);
      if (cs.class_of[x] == unassigned) {
        cs.class_of[x] = id;
        members.push_back(x);
      }
    }
    std::sort(members.begin(), members.end());
    cs.classes.push_back(std::move(members));
    cs.representatives.push_back(g);
  }
  for (const auto& cls : cs.classes) cs.class_sizes.push_back(cls.size());
  for (std::size_t c = 0; c < cs.classes.size(); ++c) {
    cs.class_inverse.push_back(cs.class_of[group.inverse(cs.representatives[c])]);
  }
  cs.exponent = group.exponent();
  return cs;
}

RotationSpectrum rotation_spectrum(const FiniteGroup& group, FiniteGroup::Element g) {
  if (!group.has_matrices()) throw std::invalid_argument("rotation_spectrum needs a matrix representation");
  RotationSpectrum spec;
  spec.order = group.element_order(g);
  const Matrix2& m = group.matrix(g);
  int total = 0;
  for (std::uint32_t j = 0; j < spec.order; ++j) {
    const CycNum lambda = CycNum::root_of_unity(spec.order, j);
    const Matrix2 shifted{m[0] - lambda, m[1], m[2], m[3] - lambda};
    int mult = 0;
    if (std::all_of(shifted.begin(), shifted.end(), [](const CycNum& x) { return x.is_zero(); })) {
      mult = 2;
    } else if (det(shifted).is_zero()) {
      mult = 1;
    }
    if (mult > 0) {
      spec.eigen_exponents.emplace_back(j, mult);
      total += mult;
    }
  }
  if (total != 2) throw std::logic_error("element is not diagonalizable over its roots of unity");
  return spec;
}

}  // namespace mckay
