#include "mckay/algebra.hpp"

#include <stdexcept>
#include <utility>

#include "mckay/serialize.hpp"

namespace mckay {

void add_term(AlgebraElement& x, std::size_t index, const CycNum& coeff) {
  if (coeff.is_zero()) return;
  auto it = x.find(index);
  if (it == x.end()) {
    x.emplace(index, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) x.erase(it);
}

AlgebraElement scale(const AlgebraElement& x, const CycNum& s) {
  AlgebraElement out;
  if (s.is_zero()) return out;
  for (const auto& [i, c] : x) out.emplace(i, c * s);
  return out;
}

bool equal(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.size() != b.size()) return false;
  for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib) {
    if (ia->first != ib->first || !(ia->second == ib->second)) return false;
  }
  return true;
}

GradedAlgebra::GradedAlgebra(std::string name, std::vector<BasisVector> basis)
    : name_(std::move(name)), basis_(std::move(basis)), products_(basis_.size() * basis_.size()) {
  int units = 0, points = 0;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (!index_.emplace(basis_[i].label, i).second) throw std::invalid_argument("duplicate basis label " + basis_[i].label);
    if (basis_[i].degree < 0 || basis_[i].degree > 2) throw std::invalid_argument("basis degree must be 0, 1 or 2");
    if (basis_[i].degree == 0) {
      unit_ = i;
      ++units;
    }
    if (basis_[i].degree == 2) {
      point_ = i;
      ++points;
    }
  }
  if (units != 1 || points != 1) throw std::invalid_argument("algebra needs exactly one unit and one point class");
}

std::size_t GradedAlgebra::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw std::out_of_range("no basis vector labelled " + label);
  return it->second;
}

std::optional<std::size_t> GradedAlgebra::find(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> GradedAlgebra::indices_of_degree(int degree) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].degree == degree) out.push_back(i);
  }
  return out;
}

void GradedAlgebra::set_product(std::size_t i, std::size_t j, AlgebraElement value) {
  for (auto it = value.begin(); it != value.end();) {
    it = it->second.is_zero() ? value.erase(it) : std::next(it);
  }
  products_.at(i * basis_.size() + j) = std::move(value);
}

void GradedAlgebra::set_symmetric_product(std::size_t i, std::size_t j, const AlgebraElement& value) {
  set_product(i, j, value);
  if (i != j) set_product(j, i, value);
}

AlgebraElement GradedAlgebra::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
  AlgebraElement out;
  for (const auto& [i, ca] : a) {
    for (const auto& [j, cb] : b) {
      const auto& p = product(i, j);
      if (p.empty()) continue;
      const CycNum c = ca * cb;
      for (const auto& [k, ck] : p) add_term(out, k, c * ck);
    }
  }
  return out;
}

CycMatrix GradedAlgebra::gram_matrix() const {
  const auto deg1 = indices_of_degree(1);
  CycMatrix g(deg1.size(), deg1.size());
  for (std::size_t a = 0; a < deg1.size(); ++a) {
    for (std::size_t b = 0; b < deg1.size(); ++b) {
      const auto& p = product(deg1[a], deg1[b]);
      auto it = p.find(point_);
      if (it != p.end()) g(a, b) = it->second;
    }
  }
  return g;
}

CycMatrix gram_matrix(const GradedAlgebra& algebra) { return algebra.gram_matrix(); }

std::optional<std::array<std::size_t, 3>> GradedAlgebra::associativity_violation() const {
  const std::size_t n = basis_.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto& ab = product(a, b);
      for (std::size_t c = 0; c < n; ++c) {
        const auto& bc = product(b, c);
        if (ab.empty() && bc.empty()) continue;
        const auto left = multiply(ab, element(c));
        const auto right = multiply(element(a), bc);
        if (!equal(left, right)) return std::array<std::size_t, 3>{a, b, c};
      }
    }
  }
  return std::nullopt;
}

std::optional<std::array<std::size_t, 2>> GradedAlgebra::commutativity_violation() const {
  const std::size_t n = basis_.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!equal(product(a, b), product(b, a))) return std::array<std::size_t, 2>{a, b};
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> GradedAlgebra::unit_violation() const {
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    if (!equal(product(unit_, b), element(b)) || !equal(product(b, unit_), element(b))) return b;
  }
  return std::nullopt;
}

std::optional<std::array<std::size_t, 2>> GradedAlgebra::grading_violation() const {
  const std::size_t n = basis_.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const int d = basis_[a].degree + basis_[b].degree;
      for (const auto& [k, c] : product(a, b)) {
        if (basis_[k].degree != d) return std::array<std::size_t, 2>{a, b};
      }
    }
  }
  return std::nullopt;
}

nlohmann::json GradedAlgebra::structure_constants_json() const {
  nlohmann::json out = nlohmann::json::object();
  const std::size_t n = basis_.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (const auto& [k, c] : product(a, b)) out[basis_[a].label][basis_[b].label][basis_[k].label] = to_json(c);
    }
  }
  return out;
}

}  // namespace mckay
