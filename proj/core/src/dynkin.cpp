#include <algorithm>
#include <numeric>
#include <string>

#include "mckay/chartab.hpp"

namespace mckay {
namespace {

void validate_graph(const IntMatrix& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw DiagramError("not affine ADE: adjacency is not square");
    if (a[i][i] != 0) throw DiagramError("not affine ADE: loop at vertex " + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) {
      if (a[i][j] < 0 || a[i][j] != a[j][i]) throw DiagramError("not affine ADE: adjacency is not symmetric");
    }
  }
}

bool connected(const IntMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < n; ++w) {
      if (a[v][w] > 0 && !seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

std::vector<std::size_t> neighbours(const IntMatrix& a, std::size_t v) {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < a.size(); ++w) {
    if (a[v][w] > 0) out.push_back(w);
  }
  return out;
}

// Vertices on the arm leaving `branch` through `first`, branch excluded.
int arm_length(const IntMatrix& a, std::size_t branch, std::size_t first) {
  int len = 1;
  std::size_t prev = branch, cur = first;
  for (;;) {
    auto nb = neighbours(a, cur);
    if (nb.size() != 2) return len;
    const std::size_t next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
    ++len;
  }
}

struct Shape {
  std::size_t n = 0;
  long edges = 0;
  bool simple = true;
  std::vector<std::size_t> degree;
};

Shape shape_of(const IntMatrix& a) {
  Shape s;
  s.n = a.size();
  s.degree.assign(s.n, 0);
  for (std::size_t i = 0; i < s.n; ++i) {
    for (std::size_t j = 0; j < s.n; ++j) {
      if (a[i][j] > 1) s.simple = false;
      if (a[i][j] > 0) ++s.degree[i];
      if (j > i) s.edges += a[i][j];
    }
  }
  return s;
}

std::vector<int> sorted_arms(const IntMatrix& a, std::size_t branch) {
  std::vector<int> arms;
  for (auto w : neighbours(a, branch)) arms.push_back(arm_length(a, branch, w));
  std::sort(arms.begin(), arms.end());
  return arms;
}

}  // namespace

AdeLabel classify_finite_ade(const IntMatrix& adjacency) {
  validate_graph(adjacency);
  if (!connected(adjacency)) throw DiagramError("not a finite ADE diagram: graph is disconnected");
  const Shape s = shape_of(adjacency);
  const int n = static_cast<int>(s.n);
  if (!s.simple || s.edges != n - 1) throw DiagramError("not a finite ADE diagram: not a simple tree");
  std::vector<std::size_t> branches;
  for (std::size_t v = 0; v < s.n; ++v) {
    if (s.degree[v] > 3) throw DiagramError("not a finite ADE diagram: vertex of degree > 3");
    if (s.degree[v] == 3) branches.push_back(v);
  }
  if (branches.empty()) return {AdeFamily::A, n};
  if (branches.size() == 1) {
    const auto arms = sorted_arms(adjacency, branches[0]);
    if (arms[0] == 1 && arms[1] == 1) return {AdeFamily::D, n};
    if (arms == std::vector<int>{1, 2, 2}) return {AdeFamily::E, 6};
    if (arms == std::vector<int>{1, 2, 3}) return {AdeFamily::E, 7};
    if (arms == std::vector<int>{1, 2, 4}) return {AdeFamily::E, 8};
  }
  throw DiagramError("not a finite ADE diagram");
}

DiagramMatch classify_affine_ade(const IntMatrix& adjacency, std::span<const long> dims, std::size_t trivial_vertex) {
  validate_graph(adjacency);
  const std::size_t n = adjacency.size();
  if (dims.size() != n) throw DiagramError("not affine ADE: dimension vector has wrong length");
  if (trivial_vertex >= n) throw DiagramError("not affine ADE: trivial vertex out of range");
  if (n < 2 || !connected(adjacency)) throw DiagramError("not affine ADE: graph is not connected or too small");
  if (dims[trivial_vertex] != 1) throw DiagramError("not affine ADE: trivial vertex does not have dimension 1");
  for (std::size_t i = 0; i < n; ++i) {
    long sum = 0;
    for (std::size_t j = 0; j < n; ++j) sum += adjacency[i][j] * dims[j];
    if (dims[i] <= 0 || sum != 2 * dims[i]) {
      throw DiagramError("not affine ADE: dimension vector is not a null vector of the Cartan matrix");
    }
  }

  const Shape s = shape_of(adjacency);
  const int nn = static_cast<int>(n);
  std::optional<AdeLabel> affine;
  if (n == 2 && adjacency[0][1] == 2) {
    affine = AdeLabel{AdeFamily::A, 1};
  } else if (s.simple) {
    const bool all_two = std::all_of(s.degree.begin(), s.degree.end(), [](std::size_t d) { return d == 2; });
    if (all_two && s.edges == nn) {
      affine = AdeLabel{AdeFamily::A, nn - 1};
    } else if (s.edges == nn - 1) {
      std::vector<std::size_t> branches;
      bool degree_four = false;
      for (std::size_t v = 0; v < n; ++v) {
        if (s.degree[v] == 4) degree_four = true;
        if (s.degree[v] >= 3) branches.push_back(v);
      }
      if (degree_four) {
        if (n == 5 && branches.size() == 1) affine = AdeLabel{AdeFamily::D, 4};
      } else if (branches.size() == 2) {
        bool ok = true;
        for (auto b : branches) {
          int leaves = 0;
          for (auto w : neighbours(adjacency, b)) leaves += s.degree[w] == 1 ? 1 : 0;
          ok = ok && leaves == 2;
        }
        if (ok && n >= 6) affine = AdeLabel{AdeFamily::D, nn - 1};
      } else if (branches.size() == 1) {
        const auto arms = sorted_arms(adjacency, branches[0]);
        if (arms == std::vector<int>{2, 2, 2}) affine = AdeLabel{AdeFamily::E, 6};
        if (arms == std::vector<int>{1, 3, 3}) affine = AdeLabel{AdeFamily::E, 7};
        if (arms == std::vector<int>{1, 2, 5}) affine = AdeLabel{AdeFamily::E, 8};
      }
    }
  }
  if (!affine) throw DiagramError("not affine ADE");

  IntMatrix reduced;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == trivial_vertex) continue;
    std::vector<long> row;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != trivial_vertex) row.push_back(adjacency[i][j]);
    }
    reduced.push_back(std::move(row));
  }
  const AdeLabel finite = classify_finite_ade(reduced);
  if (finite != *affine) {
    throw DiagramError("not affine ADE: deleting the trivial vertex gives " + finite.to_string() + ", expected " +
                       affine->to_string());
  }
  return {*affine, finite};
}

}  // namespace mckay
