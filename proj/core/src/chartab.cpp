#include "mckay/chartab.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

namespace mckay {

ClassMultiplicationTensor class_multiplication_tensor(const FiniteGroup& group, const ConjugacyStructure& classes) {
  const std::size_t k = classes.size();
  ClassMultiplicationTensor t(k);
  for (std::size_t l = 0; l < k; ++l) {
    const auto z = classes.representatives[l];
    for (FiniteGroup::Element x = 0; x < group.order(); ++x) {
      const auto y = group.multiply(group.inverse(x), z);
      ++t(classes.class_of[x], classes.class_of[y], l);
    }
  }
  return t;
}

namespace {

// ---------------------------------------------------------------------------
// arithmetic modulo a word-sized prime

using u64 = std::uint64_t;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p); }

u64 pow_mod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1U) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1U;
  }
  return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

u64 primitive_root(u64 p) {
  const auto factors = prime_factors(p - 1);
  for (u64 g = 2; g < p; ++g) {
    if (std::all_of(factors.begin(), factors.end(), [&](u64 q) { return pow_mod(g, (p - 1) / q, p) != 1; })) return g;
  }
  return 1;  // p == 2
}

// Smallest prime p with p = 1 (mod e) and p > 2 sqrt(order).
u64 choose_prime(u64 e, u64 order) {
  for (u64 p = e + 1;; p += e) {
    if (p * p > 4 * order && is_prime(p)) return p;
  }
}

using ModVec = std::vector<u64>;
using ModMat = std::vector<ModVec>;

// Basis of the right kernel of a (rows x cols) matrix over F_p.
std::vector<ModVec> kernel(ModMat a, std::size_t cols, u64 p) {
  const std::size_t rows = a.size();
  std::vector<std::size_t> pivot_col_of_row;
  std::vector<char> is_pivot(cols, 0);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const u64 inv = inv_mod(a[r][c], p);
    for (auto& x : a[r]) x = mul_mod(x, inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const u64 f = a[i][c];
      for (std::size_t k = 0; k < cols; ++k) a[i][k] = (a[i][k] + p - mul_mod(f, a[r][k], p)) % p;
    }
    pivot_col_of_row.push_back(c);
    is_pivot[c] = 1;
    ++r;
  }
  std::vector<ModVec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    ModVec v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i) v[pivot_col_of_row[i]] = (p - a[i][free]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

// Common eigenvectors of the class matrices M_j[i][l] = a(j, i, l) mod p,
// each normalised to v[0] = 1.  v[j] is then the central character value
// omega(K_j) = |C_j| chi(g_j) / chi(1) mod p.
std::vector<ModVec> central_characters(const ClassMultiplicationTensor& t, u64 p, const CharacterTableOptions& options) {
  const std::size_t k = t.classes();
  std::vector<ModMat> mats(k, ModMat(k, ModVec(k)));
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t l = 0; l < k; ++l) mats[j][i][l] = t(j, i, l) % p;
    }
  }
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<u64> coeff(0, p - 1);

  std::vector<std::vector<ModVec>> pending;
  {
    std::vector<ModVec> full;
    for (std::size_t i = 0; i < k; ++i) {
      ModVec e(k, 0);
      e[i] = 1;
      full.push_back(std::move(e));
    }
    pending.push_back(std::move(full));
  }
  std::vector<ModVec> lines;
  while (!pending.empty()) {
    auto space = std::move(pending.back());
    pending.pop_back();
    if (space.size() == 1) {
      lines.push_back(std::move(space[0]));
      continue;
    }
    const std::size_t d = space.size();
    bool split = false;
    for (int attempt = 0; attempt < options.max_attempts && !split; ++attempt) {
      ModMat m(k, ModVec(k, 0));
      for (std::size_t j = 0; j < k; ++j) {
        const u64 c = coeff(rng);
        if (c == 0) continue;
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t l = 0; l < k; ++l) m[i][l] = (m[i][l] + mul_mod(c, mats[j][i][l], p)) % p;
        }
      }
      // image of the subspace basis: columns of (M B)
      std::vector<ModVec> image(d, ModVec(k, 0));
      for (std::size_t t_ = 0; t_ < d; ++t_) {
        for (std::size_t i = 0; i < k; ++i) {
          u64 acc = 0;
          for (std::size_t l = 0; l < k; ++l) acc = (acc + mul_mod(m[i][l], space[t_][l], p)) % p;
          image[t_][i] = acc;
        }
      }
      std::vector<std::vector<ModVec>> pieces;
      std::size_t covered = 0;
      for (u64 lambda = 0; lambda < p && covered < d; ++lambda) {
        ModMat a(k, ModVec(d));
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t t_ = 0; t_ < d; ++t_) a[i][t_] = (image[t_][i] + p - mul_mod(lambda, space[t_][i], p)) % p;
        }
        auto ker = kernel(std::move(a), d, p);
        if (ker.empty()) continue;
        covered += ker.size();
        std::vector<ModVec> piece;
        for (const auto& x : ker) {
          ModVec v(k, 0);
          for (std::size_t t_ = 0; t_ < d; ++t_) {
            if (x[t_] == 0) continue;
            for (std::size_t i = 0; i < k; ++i) v[i] = (v[i] + mul_mod(x[t_], space[t_][i], p)) % p;
          }
          piece.push_back(std::move(v));
        }
        pieces.push_back(std::move(piece));
      }
      if (covered != d) throw CharacterTableError("class matrix combination is not diagonalizable mod p");
      if (pieces.size() > 1) {
        split = true;
        for (auto& piece : pieces) pending.push_back(std::move(piece));
      }
    }
    if (!split) throw CharacterTableError("eigenspaces did not split after the allowed number of random combinations");
  }

  for (auto& v : lines) {
    if (v[0] == 0) throw CharacterTableError("common eigenvector has zero identity component");
    const u64 inv = inv_mod(v[0], p);
    for (auto& x : v) x = mul_mod(x, inv, p);
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t i = 0; i < k; ++i) {
        u64 acc = 0;
        for (std::size_t l = 0; l < k; ++l) acc = (acc + mul_mod(mats[j][i][l], v[l], p)) % p;
        if (acc != mul_mod(v[j], v[i], p)) throw CharacterTableError("eigenvector is not common to all class matrices");
      }
    }
  }
  return lines;
}

struct RowKey {
  long degree;
  long first_nonreal;  // -1 for real characters
};

}  // namespace

CharacterTable character_table(std::shared_ptr<const FiniteGroup> group, const CharacterTableOptions& options) {
  CharacterTable table;
  table.group_ = group;
  table.classes_ = conjugacy_structure(*group);
  const auto& cs = table.classes_;
  const std::size_t k = cs.size();
  const u64 order = group->order();
  const u64 e = cs.exponent;
  const u64 p = choose_prime(e, order);
  table.prime_ = p;
  table.conductor_ = static_cast<std::uint32_t>(std::lcm<u64>(2 * e, group->matrix_conductor()));

  const auto tensor = class_multiplication_tensor(*group, cs);
  const auto omegas = central_characters(tensor, p, options);
  if (omegas.size() != k) throw CharacterTableError("wrong number of irreducible characters");

  const u64 z = pow_mod(primitive_root(p), (p - 1) / e, p);  // image of zeta_e
  const u64 max_degree = static_cast<u64>(std::sqrt(static_cast<double>(order))) + 1;

  std::vector<std::vector<CycNum>> rows;
  std::vector<long> degrees;
  for (const auto& omega : omegas) {
    u64 s = 0;
    for (std::size_t i = 0; i < k; ++i) {
      s = (s + mul_mod(mul_mod(omega[i], omega[cs.class_inverse[i]], p), inv_mod(cs.class_sizes[i] % p, p), p)) % p;
    }
    if (s == 0) throw CharacterTableError("degenerate central character");
    const u64 d2 = mul_mod(order % p, inv_mod(s, p), p);
    u64 d = 0;
    for (u64 cand = 1; cand <= max_degree && cand * cand <= order; ++cand) {
      if (cand * cand % p == d2) {
        d = cand;
        break;
      }
    }
    if (d == 0) throw CharacterTableError("could not recover a character degree");

    std::vector<u64> chi_mod(k);
    for (std::size_t i = 0; i < k; ++i) {
      chi_mod[i] = mul_mod(mul_mod(omega[i], d, p), inv_mod(cs.class_sizes[i] % p, p), p);
    }

    std::vector<CycNum> row(k);
    for (std::size_t i = 0; i < k; ++i) {
      const auto g = cs.representatives[i];
      const std::uint32_t r = group->element_order(g);
      const u64 zr = pow_mod(z, e / r, p);
      const u64 r_inv = inv_mod(r % p, p);
      std::map<std::int64_t, Rational> terms;
      u64 total = 0;
      for (std::uint32_t j = 0; j < r; ++j) {
        u64 acc = 0;
        for (std::uint32_t l = 0; l < r; ++l) {
          const u64 val = chi_mod[cs.class_of[group->power(g, l)]];
          const u64 root = pow_mod(zr, (static_cast<u64>(r) - (static_cast<u64>(j) * l) % r) % r, p);
          acc = (acc + mul_mod(val, root, p)) % p;
        }
        const u64 m = mul_mod(acc, r_inv, p);
        if (m > d) throw CharacterTableError("eigenvalue multiplicity exceeds the character degree");
        total += m;
        if (m > 0) terms.emplace(j, Rational(static_cast<long>(m)));
      }
      if (total != d) throw CharacterTableError("eigenvalue multiplicities do not sum to the degree");
      row[i] = CycNum::from_terms(r, terms).lift_to(table.conductor_);
    }
    rows.push_back(std::move(row));
    degrees.push_back(static_cast<long>(d));
  }

  // canonical ordering
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  auto is_trivial = [&](std::size_t r) {
    return std::all_of(rows[r].begin(), rows[r].end(), [](const CycNum& x) { return x.is_one(); });
  };
  std::vector<RowKey> keys(k);
  for (std::size_t r = 0; r < k; ++r) {
    keys[r].degree = degrees[r];
    keys[r].first_nonreal = -1;
    for (std::size_t c = 0; c < k; ++c) {
      if (!(rows[r][c].conj() == rows[r][c])) {
        keys[r].first_nonreal = static_cast<long>(c);
        break;
      }
    }
  }
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    const bool ta = is_trivial(a), tb = is_trivial(b);
    if (ta != tb) return ta;
    if (keys[a].degree != keys[b].degree) return keys[a].degree < keys[b].degree;
    if (keys[a].first_nonreal != keys[b].first_nonreal) return keys[a].first_nonreal < keys[b].first_nonreal;
    for (std::size_t c = 0; c < k; ++c) {
      const int cmp = compare(rows[a][c], rows[b][c]);
      if (cmp != 0) return cmp < 0;
    }
    return false;
  });
  for (auto r : perm) {
    table.rows_.push_back(rows[r]);
    table.degrees_.push_back(degrees[r]);
  }
  if (!is_trivial(perm[0])) throw CharacterTableError("trivial character missing");

  if (group->has_matrices()) {
    std::vector<CycNum> natural;
    for (std::size_t c = 0; c < k; ++c) {
      natural.push_back(trace(group->matrix(cs.representatives[c])).lift_to(table.conductor_));
    }
    table.natural_ = std::move(natural);
  }

  if (auto err = orthogonality_violation(table)) throw CharacterTableError(*err);
  return table;
}

std::optional<std::string> orthogonality_violation(const CharacterTable& table) {
  const std::size_t k = table.size();
  const auto& cs = table.classes();
  const long order = static_cast<long>(table.group().order());
  std::vector<std::vector<CycNum>> conj_rows(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t c = 0; c < k; ++c) conj_rows[i].push_back(table.value(i, c).conj());
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      CycNum sum;
      for (std::size_t c = 0; c < k; ++c) {
        sum += CycNum(static_cast<long>(cs.class_sizes[c])) * table.value(i, c) * conj_rows[j][c];
      }
      if (!(sum == CycNum(i == j ? order : 0L))) {
        return "row orthogonality fails for rows " + std::to_string(i) + ", " + std::to_string(j);
      }
    }
  }
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t d = c; d < k; ++d) {
      CycNum sum;
      for (std::size_t i = 0; i < k; ++i) sum += table.value(i, c) * conj_rows[i][d];
      const Rational expected = c == d ? Rational(order, static_cast<long>(cs.class_sizes[c])) : Rational(0);
      if (!(sum == CycNum(expected))) {
        return "column orthogonality fails for classes " + std::to_string(c) + ", " + std::to_string(d);
      }
    }
  }
  long sum_sq = 0;
  for (auto d : table.degrees()) sum_sq += d * d;
  if (sum_sq != order) return "sum of squared degrees differs from the group order";
  return std::nullopt;
}

CycNum class_function_product(const CharacterTable& table, std::span<const CycNum> f, std::span<const CycNum> g,
                              std::span<const CycNum> h) {
  const auto& cs = table.classes();
  CycNum sum;
  for (std::size_t c = 0; c < cs.size(); ++c) {
    sum += CycNum(static_cast<long>(cs.class_sizes[c])) * f[c] * g[c] * h[c].conj();
  }
  return sum * CycNum(Rational(1, static_cast<long>(table.group().order())));
}

namespace {

long certify_multiplicity(const CycNum& value, const char* what) {
  const auto q = value.to_rational();
  if (!q || q->get_den() != 1 || *q < 0) {
    throw CharacterTableError(std::string(what) + " is not a non-negative integer: " + value.to_string());
  }
  return q->get_num().get_si();
}

}  // namespace

long tensor_multiplicity(const CharacterTable& table, std::size_t i, std::size_t j, std::size_t k) {
  return certify_multiplicity(class_function_product(table, table.row(i), table.row(j), table.row(k)),
                              "tensor multiplicity");
}

long natural_multiplicity(const CharacterTable& table, std::size_t i, std::size_t k) {
  if (!table.natural_character()) throw std::invalid_argument("table has no natural character");
  return certify_multiplicity(class_function_product(table, table.row(i), *table.natural_character(), table.row(k)),
                              "McKay multiplicity");
}

std::vector<std::size_t> McKayGraph::finite_vertices() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < dims.size(); ++v) {
    if (v != trivial_vertex) out.push_back(v);
  }
  return out;
}

IntMatrix McKayGraph::finite_adjacency() const {
  const auto verts = finite_vertices();
  IntMatrix out(verts.size(), std::vector<long>(verts.size()));
  for (std::size_t a = 0; a < verts.size(); ++a) {
    for (std::size_t b = 0; b < verts.size(); ++b) out[a][b] = adjacency[verts[a]][verts[b]];
  }
  return out;
}

McKayGraph mckay_graph(const CharacterTable& table) {
  McKayGraph g;
  const std::size_t k = table.size();
  g.adjacency.assign(k, std::vector<long>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) g.adjacency[i][j] = natural_multiplicity(table, i, j);
  }
  g.dims.assign(table.degrees().begin(), table.degrees().end());
  g.trivial_vertex = 0;
  g.diagram = classify_affine_ade(g.adjacency, g.dims, g.trivial_vertex);
  return g;
}

std::string to_dot(const McKayGraph& graph, const std::string& name) {
  std::ostringstream os;
  os << "graph \"" << name << "\" {\n";
  os << "  label=\"affine " << graph.diagram.affine.to_string() << "\";\n";
  for (std::size_t v = 0; v < graph.dims.size(); ++v) {
    os << "  v" << v << " [label=\"" << graph.dims[v] << "\"";
    if (v == graph.trivial_vertex) os << ", shape=doublecircle, xlabel=\"trivial\"";
    os << "];\n";
  }
  for (std::size_t i = 0; i < graph.dims.size(); ++i) {
    for (std::size_t j = i + 1; j < graph.dims.size(); ++j) {
      const long m = graph.adjacency[i][j];
      if (m == 0) continue;
      os << "  v" << i << " -- v" << j;
      if (m > 1) os << " [label=\"" << m << "\", penwidth=" << m << "]";
      os << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace mckay
