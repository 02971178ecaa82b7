#include <algorithm>
#include <cctype>
#include <array>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "mckay/groups.hpp"

namespace mckay {
namespace {

using Table = std::vector<std::vector<std::uint32_t>>;

// Cayley table of the closure of a set of elements under a binary
// operation; the identity must be listed first.
template <typename T, typename Op>
Table closure_table(std::vector<T> elements, const std::vector<T>& gens, Op op) {
  std::map<T, std::uint32_t> index;
  for (std::uint32_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], i);
  for (std::size_t k = 0; k < elements.size(); ++k) {
    for (const auto& s : gens) {
      T y = op(elements[k], s);
      if (!index.count(y)) {
        index.emplace(y, static_cast<std::uint32_t>(elements.size()));
        elements.push_back(y);
      }
    }
  }
  Table t(elements.size(), std::vector<std::uint32_t>(elements.size()));
  for (std::size_t a = 0; a < elements.size(); ++a) {
    for (std::size_t b = 0; b < elements.size(); ++b) t[a][b] = index.at(op(elements[a], elements[b]));
  }
  return t;
}

using Perm = std::vector<int>;

Perm compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[static_cast<std::size_t>(q[i])];
  return r;
}

Perm identity_perm(int n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Table permutation_group(int degree, const std::vector<Perm>& gens) {
  return closure_table<Perm>({identity_perm(degree)}, gens, compose);
}

using Quaternion = std::array<int, 4>;

Quaternion hamilton(const Quaternion& x, const Quaternion& y) {
  return {x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3], x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2],
          x[0] * y[2] - x[1] * y[3] + x[2] * y[0] + x[3] * y[1], x[0] * y[3] + x[1] * y[2] - x[2] * y[1] + x[3] * y[0]};
}

}  // namespace

FiniteGroup build_named_group(const std::string& name) {
  if (name == "S3") return group_from_cayley(permutation_group(3, {{1, 0, 2}, {1, 2, 0}}), name);
  if (name == "S4") return group_from_cayley(permutation_group(4, {{1, 0, 2, 3}, {1, 2, 3, 0}}), name);
  if (name == "Alt4") return group_from_cayley(permutation_group(4, {{1, 2, 0, 3}, {0, 2, 3, 1}}), name);
  if (name == "Dih8") return group_from_cayley(permutation_group(4, {{1, 2, 3, 0}, {0, 3, 2, 1}}), name);
  if (name == "Q8") {
    const Table t = closure_table<Quaternion>({{1, 0, 0, 0}}, {{0, 1, 0, 0}, {0, 0, 1, 0}}, hamilton);
    return group_from_cayley(t, name);
  }
  if (name.size() > 1 && name.size() < 6 && name[0] == 'Z' &&
      std::all_of(name.begin() + 1, name.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
    const int n = std::stoi(name.substr(1));
    if (n < 1) throw std::invalid_argument("Z<n> requires n >= 1");
    Table t(static_cast<std::size_t>(n), std::vector<std::uint32_t>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) t[a][b] = static_cast<std::uint32_t>((a + b) % n);
    }
    return group_from_cayley(t, name);
  }
  throw std::invalid_argument("unknown named group '" + name + "'");
}

std::vector<std::string> lemma_corpus_names() { return {"S3", "S4", "Alt4", "Dih8", "Q8", "Z6"}; }

}  // namespace mckay
