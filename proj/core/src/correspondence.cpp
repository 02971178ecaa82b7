#include "mckay/correspondence.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>

#include "mckay/orbifold.hpp"
#include "mckay/resolution.hpp"
#include "mckay/serialize.hpp"

namespace mckay {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

CycNum sine_difference(std::uint32_t r, std::uint32_t k) {
  return CycNum::root_of_unity(2 * r, k) - CycNum::root_of_unity(2 * r, -static_cast<std::int64_t>(k));
}

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

ComplexVector to_dense(const AlgebraElement& x, std::size_t dim) {
  ComplexVector v(dim);
  for (const auto& [i, c] : x) v[i] = c.to_complex();
  return v;
}

Complex complex_determinant(std::vector<ComplexVector> a) {
  const std::size_t n = a.size();
  Complex det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    }
    if (std::abs(a[piv][col]) == 0.0) return 0.0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

nlohmann::json pair_witness(const WeightedMap& map, std::size_t a, std::size_t b, const AlgebraElement& lhs,
                            const AlgebraElement& rhs) {
  return {{"pair", {map.source->basis(a).label, map.source->basis(b).label}},
          {"lhs", to_json(lhs, *map.target)},
          {"rhs", to_json(rhs, *map.target)}};
}

void validate(const WeightedMap& map) {
  if (map.source == nullptr || map.target == nullptr) throw std::invalid_argument("weighted map without algebras");
  if (map.images.size() != map.source->dimension() || map.weights.size() != map.source->dimension()) {
    throw std::invalid_argument("weighted map does not cover the source basis");
  }
  for (auto w : map.weights) {
    if (w == 0) throw std::invalid_argument("weighted map has a zero weight");
  }
}

// sum_c (ab)_c sqrt(w_a w_b / w_c) S(c)
AlgebraElement expected_product(const WeightedMap& map, std::size_t a, std::size_t b) {
  AlgebraElement rhs;
  for (const auto& [c, coeff] : map.source->product(a, b)) {
    const CycNum factor = coeff * sqrt_ratio(map.weights[a] * map.weights[b], map.weights[c]);
    for (const auto& [t, tc] : map.images[c]) add_term(rhs, t, factor * tc);
  }
  return rhs;
}

// Image matrix restricted to degree-1 blocks: rows target, columns source.
CycMatrix degree_one_block(const WeightedMap& map) {
  const auto src = map.source->indices_of_degree(1);
  const auto tgt = map.target->indices_of_degree(1);
  std::vector<std::size_t> row_of(map.target->dimension(), tgt.size());
  for (std::size_t r = 0; r < tgt.size(); ++r) row_of[tgt[r]] = r;
  CycMatrix m(tgt.size(), src.size());
  for (std::size_t c = 0; c < src.size(); ++c) {
    for (const auto& [t, coeff] : map.images[src[c]]) {
      if (row_of[t] < tgt.size()) m(row_of[t], c) = coeff;
    }
  }
  return m;
}

}  // namespace

CycNum branch_sqrt(const CharacterTable& table, std::size_t cls) {
  if (cls == 0) throw std::invalid_argument("branch square root is not defined on the identity class");
  if (!table.natural_character()) throw std::invalid_argument("branch square root needs the natural character");
  const CycNum& chi = (*table.natural_character()).at(cls);
  const std::uint32_t r = table.group().element_order(table.classes().representatives.at(cls));
  for (std::uint32_t k = 1; 2 * k <= r; ++k) {
    if (CycNum::root_of_unity(r, k) + CycNum::root_of_unity(r, -static_cast<std::int64_t>(k)) == chi) {
      return sine_difference(r, k);
    }
  }
  throw std::logic_error("natural character is not a trace of an element of order " + std::to_string(r));
}

CycNum element_branch_sqrt(const FiniteGroup& group, FiniteGroup::Element g) {
  if (g == 0) throw std::invalid_argument("branch square root is not defined on the identity");
  const RotationSpectrum spec = rotation_spectrum(group, g);
  const std::uint32_t j = spec.eigen_exponents.front().first;
  return sine_difference(spec.order, std::min(j, spec.order - j));
}

CorrespondenceMap phi_local(const CharacterTable& table, const McKayGraph& graph) {
  CorrespondenceMap map;
  for (std::size_t c = 1; c < table.classes().size(); ++c) map.classes.push_back(c);
  map.irreps = graph.finite_vertices();
  if (map.classes.size() != map.irreps.size()) throw std::logic_error("correspondence matrix is not square");
  map.matrix = CycMatrix(map.classes.size(), map.irreps.size());
  for (std::size_t r = 0; r < map.classes.size(); ++r) {
    const CycNum s = branch_sqrt(table, map.classes[r]);
    for (std::size_t c = 0; c < map.irreps.size(); ++c) map.matrix(r, c) = s * table.value(map.irreps[c], map.classes[r]);
  }
  map.scale = table.group().order();
  return map;
}

void CorrespondenceMap::materialize_unscaled() {
  const CycNum inv_sqrt = integer_sqrt_embed(scale) / CycNum(static_cast<long>(scale));
  CycMatrix m = matrix;
  m *= inv_sqrt;
  exact_unscaled = std::move(m);
}

nlohmann::json to_json(const CorrespondenceMap& map) {
  nlohmann::json rows = nlohmann::json::array(), cols = nlohmann::json::array();
  for (auto c : map.classes) rows.push_back(class_sum_label(c));
  for (auto i : map.irreps) cols.push_back(curve_label(i));
  nlohmann::json out = {{"rows", rows},
                        {"cols", cols},
                        {"scale", map.scale},
                        {"convention",
                         "matrix = sqrt(scale) * phi; entry s(g) * chi(g) with s(g) = z_2r^k - z_2r^-k, "
                         "0 < k <= r/2, eigenvalues z_r^(+-k)"},
                        {"matrix", to_json(map.matrix)}};
  if (map.exact_unscaled) out["unscaled"] = to_json(*map.exact_unscaled);
  return out;
}

CycNum char_minor_determinant(const CharacterTable& table) {
  const std::size_t k = table.size();
  CycMatrix m(k - 1, k - 1);
  for (std::size_t i = 1; i < k; ++i) {
    for (std::size_t j = 1; j < k; ++j) m(i - 1, j - 1) = table.value(i, j);
  }
  return determinant(std::move(m));
}

CheckResult check_minor_determinant(const CharacterTable& table) {
  CheckResult r{"minor-determinant"};
  const CycNum d = char_minor_determinant(table);
  r.pass = !d.is_zero();
  r.detail["determinant"] = to_json(d);
  r.detail["size"] = table.size() - 1;
  if (!r.pass) r.witness = {{"determinant", to_json(d)}};
  return r;
}

CycNum sqrt_ratio(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw std::domain_error("sqrt_ratio with zero denominator");
  const std::uint64_t g = std::gcd(num, den);
  num /= g;
  den /= g;
  // sqrt(num/den) = sqrt(num * den) / den
  const std::uint64_t q = num * den;
  const auto root = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(q))));
  for (std::uint64_t s = root > 0 ? root - 1 : 0; s <= root + 1; ++s) {
    if (s * s == q) return CycNum(Rational(static_cast<long>(s), static_cast<long>(den)));
  }
  return integer_sqrt_embed(q) / CycNum(static_cast<long>(den));
}

CheckResult check_multiplicativity(const WeightedMap& map) {
  validate(map);
  CheckResult r{"multiplicativity"};
  const std::size_t n = map.source->dimension();
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < n && r.pass; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      ++pairs;
      const AlgebraElement lhs = map.target->multiply(map.images[a], map.images[b]);
      const AlgebraElement rhs = expected_product(map, a, b);
      if (!equal(lhs, rhs)) {
        r.pass = false;
        r.witness = pair_witness(map, a, b, lhs, rhs);
        break;
      }
    }
  }
  r.detail["pairs_checked"] = pairs;
  return r;
}

CheckResult check_additive_rank(const WeightedMap& map) {
  validate(map);
  CheckResult r{"additive-rank"};
  const std::size_t n = map.source->dimension(), m = map.target->dimension();
  CycMatrix full(m, n);
  for (std::size_t c = 0; c < n; ++c) {
    for (const auto& [t, coeff] : map.images[c]) full(t, c) = coeff;
  }
  const std::size_t rk = rank(full);
  const CycMatrix block = degree_one_block(map);
  const CycNum det = block.rows() == block.cols() ? determinant(block) : CycNum(0L);
  r.pass = n == m && rk == n && !det.is_zero();
  r.detail["dimension"] = {n, m};
  r.detail["rank"] = rk;
  r.detail["degree1_determinant"] = to_json(det);
  if (!r.pass) r.witness = {{"rank", rk}, {"dimension", {n, m}}, {"degree1_determinant", to_json(det)}};
  return r;
}

CheckResult check_isometry(const WeightedMap& map) {
  validate(map);
  CheckResult r{"isometry"};
  const auto src = map.source->indices_of_degree(1);
  const CycMatrix m = degree_one_block(map);
  const CycMatrix p = map.target->gram_matrix();
  const CycMatrix g = map.source->gram_matrix();
  const CycMatrix lhs = m.transpose() * p * m;
  for (std::size_t i = 0; i < src.size() && r.pass; ++i) {
    for (std::size_t j = 0; j < src.size(); ++j) {
      CycNum rhs = g(i, j);
      if (!rhs.is_zero()) rhs *= sqrt_ratio(map.weights[src[i]] * map.weights[src[j]], 1);
      if (!(lhs(i, j) == rhs)) {
        r.pass = false;
        r.witness = {{"pair", {map.source->basis(src[i]).label, map.source->basis(src[j]).label}},
                     {"lhs", to_json(lhs(i, j))},
                     {"rhs", to_json(rhs)}};
        break;
      }
    }
  }
  r.detail["size"] = src.size();
  return r;
}

std::vector<CheckResult> float_checks(const WeightedMap& map, double tolerance) {
  validate(map);
  const std::size_t n = map.source->dimension(), dim_t = map.target->dimension();
  std::vector<ComplexVector> images;
  for (const auto& x : map.images) images.push_back(to_dense(x, dim_t));
  std::vector<double> sqrt_w;
  for (auto w : map.weights) sqrt_w.push_back(std::sqrt(static_cast<double>(w)));

  auto multiply = [&](const ComplexVector& x, const ComplexVector& y) {
    ComplexVector out(dim_t);
    for (std::size_t i = 0; i < dim_t; ++i) {
      if (x[i] == 0.0) continue;
      for (std::size_t j = 0; j < dim_t; ++j) {
        if (y[j] == 0.0) continue;
        for (const auto& [k, c] : map.target->product(i, j)) out[k] += x[i] * y[j] * c.to_complex();
      }
    }
    return out;
  };

  CheckResult mult{"float-multiplicativity"};
  double worst = 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const ComplexVector lhs = multiply(images[a], images[b]);
      ComplexVector rhs(dim_t);
      for (const auto& [c, coeff] : map.source->product(a, b)) {
        const Complex f = coeff.to_complex() * sqrt_w[a] * sqrt_w[b] / sqrt_w[c];
        for (std::size_t t = 0; t < dim_t; ++t) rhs[t] += f * images[c][t];
      }
      for (std::size_t t = 0; t < dim_t; ++t) {
        const double err = std::abs(lhs[t] - rhs[t]);
        if (err > worst) {
          worst = err;
          if (err > tolerance && mult.witness.is_null()) {
            mult.witness = {{"pair", {map.source->basis(a).label, map.source->basis(b).label}},
                            {"component", map.target->basis(t).label},
                            {"error", err}};
          }
        }
      }
    }
  }
  mult.pass = worst <= tolerance;
  mult.detail = {{"max_error", worst}, {"tolerance", tolerance}};

  const auto src = map.source->indices_of_degree(1);
  const auto tgt = map.target->indices_of_degree(1);
  const auto p = map.target->gram_matrix().to_complex();
  const auto g = map.source->gram_matrix().to_complex();
  CheckResult iso{"float-isometry"};
  worst = 0.0;
  for (std::size_t i = 0; i < src.size(); ++i) {
    for (std::size_t j = 0; j < src.size(); ++j) {
      Complex lhs = 0.0;
      for (std::size_t a = 0; a < tgt.size(); ++a) {
        for (std::size_t b = 0; b < tgt.size(); ++b) lhs += images[src[i]][tgt[a]] * p[a][b] * images[src[j]][tgt[b]];
      }
      const Complex rhs = g[i][j] * sqrt_w[src[i]] * sqrt_w[src[j]];
      const double err = std::abs(lhs - rhs);
      if (err > worst) {
        worst = err;
        if (err > tolerance && iso.witness.is_null()) {
          iso.witness = {{"pair", {map.source->basis(src[i]).label, map.source->basis(src[j]).label}},
                         {"error", err}};
        }
      }
    }
  }
  iso.pass = worst <= tolerance;
  iso.detail = {{"max_error", worst}, {"tolerance", tolerance}};

  CheckResult det{"float-determinant"};
  const CycMatrix block = degree_one_block(map);
  const Complex exact = block.rows() == block.cols() ? determinant(block).to_complex() : Complex(0.0);
  const Complex approx = block.rows() == block.cols() ? complex_determinant(block.to_complex()) : Complex(0.0);
  const double rel = std::abs(approx - exact) / std::max(1.0, std::abs(exact));
  det.pass = rel <= tolerance;
  det.detail = {{"relative_error", rel}, {"tolerance", tolerance}, {"magnitude", std::abs(exact)}};
  if (!det.pass) det.witness = {{"exact", {exact.real(), exact.imag()}}, {"float", {approx.real(), approx.imag()}}};

  return {mult, iso, det};
}

CheckResult check_equivariance(const CharacterTable& table, const CorrespondenceMap& map) {
  CheckResult r{"equivariance"};
  const FiniteGroup& group = table.group();
  const ConjugacyStructure& cs = table.classes();
  std::vector<std::size_t> row_of(cs.size(), map.classes.size());
  for (std::size_t i = 0; i < map.classes.size(); ++i) row_of[map.classes[i]] = i;

  std::vector<CycNum> branch(group.order());
  for (FiniteGroup::Element g = 1; g < group.order(); ++g) branch[g] = element_branch_sqrt(group, g);

  std::size_t compared = 0;
  for (FiniteGroup::Element g = 1; g < group.order() && r.pass; ++g) {
    const CycNum chi0 = (*table.natural_character())[cs.class_of[g]];
    const CycNum coherent = branch[g] * branch[group.inverse(g)];
    if (!(coherent == chi0 - CycNum(2L))) {
      r.pass = false;
      r.witness = {{"element", g},
                   {"identity", "s(g) s(g^-1) = chi_0(g) - 2"},
                   {"lhs", to_json(coherent)},
                   {"rhs", to_json(chi0 - CycNum(2L))}};
      break;
    }
    std::vector<CycNum> expected;
    for (auto irrep : map.irreps) expected.push_back(branch[g] * table.value(irrep, cs.class_of[g]));
    for (FiniteGroup::Element h = 0; h < group.order() && r.pass; ++h) {
      const std::size_t row = row_of[cs.class_of[group.conjugate(g, h)]];
      for (std::size_t c = 0; c < map.irreps.size(); ++c) {
        ++compared;
        if (!(map.matrix(row, c) == expected[c])) {
          r.pass = false;
          r.witness = {{"element", g},
                       {"conjugator", h},
                       {"row", class_sum_label(map.classes[row])},
                       {"column", curve_label(map.irreps[c])},
                       {"lhs", to_json(map.matrix(row, c))},
                       {"rhs", to_json(expected[c])}};
          break;
        }
      }
    }
  }
  r.detail["entries_compared"] = compared;
  return r;
}

CheckResult float_equivariance(const CharacterTable& table, const CorrespondenceMap& map, double tolerance) {
  CheckResult r{"float-equivariance"};
  const FiniteGroup& group = table.group();
  const ConjugacyStructure& cs = table.classes();
  std::vector<std::size_t> row_of(cs.size(), 0);
  for (std::size_t i = 0; i < map.classes.size(); ++i) row_of[map.classes[i]] = i;
  const auto m = map.matrix.to_complex();
  double worst = 0.0;
  for (FiniteGroup::Element g = 1; g < group.order(); ++g) {
    // s(g) = 2i sin(pi k / r) for eigenvalues exp(+-2 pi i k / r)
    const RotationSpectrum spec = rotation_spectrum(group, g);
    const std::uint32_t j = spec.eigen_exponents.front().first;
    const double k = std::min(j, spec.order - j);
    const Complex s(0.0, 2.0 * std::sin(M_PI * k / spec.order));
    for (FiniteGroup::Element h = 0; h < group.order(); ++h) {
      const std::size_t row = row_of[cs.class_of[group.conjugate(g, h)]];
      for (std::size_t c = 0; c < map.irreps.size(); ++c) {
        const double err = std::abs(m[row][c] - s * table.value(map.irreps[c], cs.class_of[g]).to_complex());
        if (err > worst) {
          worst = err;
          if (err > tolerance && r.witness.is_null()) r.witness = {{"element", g}, {"conjugator", h}, {"error", err}};
        }
      }
    }
  }
  r.pass = worst <= tolerance;
  r.detail = {{"max_error", worst}, {"tolerance", tolerance}};
  return r;
}

std::vector<CheckResult> algebra_axioms(const GradedAlgebra& algebra, const std::string& prefix,
                                        bool require_nondegenerate) {
  auto label = [&](std::size_t i) { return algebra.basis(i).label; };
  std::vector<CheckResult> out;

  CheckResult assoc{prefix + ".associativity"};
  if (auto w = algebra.associativity_violation()) {
    assoc.pass = false;
    assoc.witness = {label((*w)[0]), label((*w)[1]), label((*w)[2])};
  }
  out.push_back(assoc);

  CheckResult comm{prefix + ".commutativity"};
  if (auto w = algebra.commutativity_violation()) {
    comm.pass = false;
    comm.witness = {label((*w)[0]), label((*w)[1])};
  }
  out.push_back(comm);

  CheckResult unit{prefix + ".unit"};
  if (auto w = algebra.unit_violation()) {
    unit.pass = false;
    unit.witness = label(*w);
  }
  out.push_back(unit);

  CheckResult grading{prefix + ".grading"};
  if (auto w = algebra.grading_violation()) {
    grading.pass = false;
    grading.witness = {label((*w)[0]), label((*w)[1])};
  }
  out.push_back(grading);

  const CycMatrix g = algebra.gram_matrix();
  CheckResult sym{prefix + ".pairing-symmetric"};
  sym.pass = g.is_symmetric();
  out.push_back(sym);

  const CycNum det = determinant(g);
  if (require_nondegenerate) {
    CheckResult nondeg{prefix + ".pairing-nondegenerate"};
    nondeg.pass = !det.is_zero();
    nondeg.detail["determinant"] = to_json(det);
    out.push_back(nondeg);
  } else {
    out.back().detail["determinant"] = to_json(det);
  }
  return out;
}

LocalModel build_local_model(const AdeLabel& label, const CharacterTableOptions& options) {
  const auto start = Clock::now();
  auto group = std::make_shared<const FiniteGroup>(build_binary_polyhedral(label));
  const double group_ms = elapsed_ms(start);
  LocalModel model = build_local_model(std::move(group), options);
  model.name = label.to_string();
  model.timings["group"] = group_ms;
  return model;
}

LocalModel build_local_model(std::shared_ptr<const FiniteGroup> group, const CharacterTableOptions& options) {
  if (!group->has_matrices()) throw std::invalid_argument("local model needs a subgroup of SL2 with matrices");
  std::map<std::string, double> timings;
  auto start = Clock::now();
  auto table = std::make_shared<const CharacterTable>(character_table(group, options));
  timings["character_table"] = elapsed_ms(start);

  start = Clock::now();
  McKayGraph graph = mckay_graph(*table);
  timings["mckay_graph"] = elapsed_ms(start);

  start = Clock::now();
  GradedAlgebra orbifold = local_orbifold_algebra(*group);
  GradedAlgebra resolution = local_resolution_algebra(graph);
  CorrespondenceMap psi = phi_local(*table, graph);
  timings["rings"] = elapsed_ms(start);

  return LocalModel{group->name(), std::move(group), std::move(table), std::move(graph), std::move(orbifold),
                    std::move(resolution), std::move(psi), std::move(timings)};
}

WeightedMap local_weighted_map(const LocalModel& model, const GradedAlgebra& invariant) {
  WeightedMap map;
  map.source = &model.resolution;
  map.target = &invariant;
  const std::size_t n = model.resolution.dimension();
  map.images.resize(n);
  map.weights.assign(n, 1);
  map.images[model.resolution.unit()] = invariant.element(invariant.unit());
  map.images[model.resolution.point()] = invariant.element(invariant.point());
  for (std::size_t c = 0; c < model.psi.irreps.size(); ++c) {
    const std::size_t src = model.resolution.index_of(curve_label(model.psi.irreps[c]));
    map.weights[src] = model.psi.scale;
    for (std::size_t r = 0; r < model.psi.classes.size(); ++r) {
      add_term(map.images[src], invariant.index_of(class_sum_label(model.psi.classes[r])), model.psi.matrix(r, c));
    }
  }
  return map;
}

VerificationReport verify_local(const LocalModel& model) {
  VerificationReport report;
  report.subject = model.name;
  report.timings = model.timings;
  report.group = group_summary(*model.group, model.table->classes());
  report.group["mckay"] = to_json(model.graph);
  report.phi = to_json(model.psi);

  const auto start = Clock::now();
  std::optional<GradedAlgebra> invariant;
  try {
    invariant.emplace(invariant_subalgebra(model.orbifold, *model.group, model.table->classes()));
  } catch (const std::domain_error& e) {
    CheckResult fail{"orbifold.invariant-subring", false, {{"error", e.what()}}};
    report.axioms.push_back(fail);
    for (const char* name : {"multiplicativity", "additive-rank", "isometry", "equivariance"}) {
      report.checks.push_back({name, false, {{"error", "invariant subring unavailable"}}});
    }
    return report;
  }

  const WeightedMap map = local_weighted_map(model, *invariant);
  report.checks.push_back(check_multiplicativity(map));
  report.checks.push_back(check_additive_rank(map));
  report.checks.push_back(check_isometry(map));
  report.checks.push_back(check_equivariance(*model.table, model.psi));
  report.timings["checks"] = elapsed_ms(start);

  const auto axioms_start = Clock::now();
  const std::pair<const GradedAlgebra*, const char*> rings[] = {
      {&model.resolution, "resolution"}, {&model.orbifold, "orbifold"}, {&*invariant, "invariant"}};
  for (const auto& [algebra, prefix] : rings) {
    for (auto& c : algebra_axioms(*algebra, prefix)) report.axioms.push_back(std::move(c));
  }
  report.timings["axioms"] = elapsed_ms(axioms_start);

  report.lemma = check_minor_determinant(*model.table);

  const auto float_start = Clock::now();
  report.diagnostics = float_checks(map);
  report.diagnostics.push_back(float_equivariance(*model.table, model.psi));
  report.timings["diagnostics"] = elapsed_ms(float_start);
  return report;
}

VerificationReport verify_local(const AdeLabel& label, const CharacterTableOptions& options) {
  return verify_local(build_local_model(label, options));
}

}  // namespace mckay
