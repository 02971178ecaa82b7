#include "mckay/orbifold.hpp"

#include <stdexcept>

namespace mckay {

Rational age(const FiniteGroup& group, FiniteGroup::Element g) {
  const RotationSpectrum spec = rotation_spectrum(group, g);
  Rational total = 0;
  for (const auto& [j, mult] : spec.eigen_exponents) total += Rational(static_cast<long>(j) * mult, spec.order);
  total.canonicalize();
  return total;
}

std::vector<Rational> element_ages(const FiniteGroup& group) {
  std::vector<Rational> out;
  out.reserve(group.order());
  for (FiniteGroup::Element g = 0; g < group.order(); ++g) out.push_back(age(group, g));
  return out;
}

Rational class_age(const FiniteGroup& group, const ConjugacyStructure& classes, std::size_t cls) {
  return age(group, classes.representatives.at(cls));
}

ObstructionEntry obstruction_class(const FiniteGroup& group, std::span<const Rational> ages, FiniteGroup::Element g,
                                   FiniteGroup::Element h) {
  const FiniteGroup::Element k = group.inverse(group.multiply(g, h));
  const long fixed_dim = (g == 0 && h == 0) ? 2 : 0;
  Rational r = ages[g] + ages[h] + ages[k] - 2 + fixed_dim;
  r.canonicalize();
  if (r.get_den() != 1 || r < 0) throw std::logic_error("obstruction bundle has invalid rank " + r.get_str());
  ObstructionEntry e;
  e.rank = r.get_num().get_si();
  e.c = e.rank == 0 ? 1 : 0;
  return e;
}

ObstructionEntry obstruction_class(const FiniteGroup& group, FiniteGroup::Element g, FiniteGroup::Element h) {
  std::vector<Rational> ages(group.order());
  for (auto x : {g, h, group.inverse(group.multiply(g, h))}) ages[x] = age(group, x);
  return obstruction_class(group, ages, g, h);
}

std::string sector_label(FiniteGroup::Element g) { return "e[" + std::to_string(g) + "]"; }

std::string class_sum_label(std::size_t cls) { return "f[" + std::to_string(cls) + "]"; }

GradedAlgebra local_orbifold_algebra(const FiniteGroup& group) {
  const std::size_t n = group.order();
  std::vector<BasisVector> basis{{"1", 0}};
  for (FiniteGroup::Element g = 1; g < n; ++g) basis.push_back({sector_label(g), 1});
  basis.push_back({"[pt]", 2});
  GradedAlgebra a("orbifold(" + group.name() + ")", std::move(basis));
  const std::size_t pt = a.point();
  const auto ages = element_ages(group);

  for (std::size_t b = 0; b < a.dimension(); ++b) a.set_symmetric_product(a.unit(), b, a.element(b));
  // Sector of element g sits at basis index g (index 0 is the unit).
  for (FiniteGroup::Element g = 1; g < n; ++g) {
    for (FiniteGroup::Element h = 1; h < n; ++h) {
      const ObstructionEntry e = obstruction_class(group, ages, g, h);
      if (e.c == 0) continue;
      if (group.multiply(g, h) != 0) throw std::logic_error("nonzero obstruction class off the inverse pairs");
      a.set_product(g, h, {{pt, CycNum(1L)}});
    }
  }
  return a;
}

GradedAlgebra invariant_subalgebra(const GradedAlgebra& algebra, const FiniteGroup& group,
                                   const ConjugacyStructure& classes) {
  if (classes.class_of.size() != group.order()) throw std::invalid_argument("class data does not match the group");
  const std::size_t k = classes.size();
  std::vector<BasisVector> basis{{"1", 0}};
  for (std::size_t c = 1; c < k; ++c) basis.push_back({class_sum_label(c), 1});
  basis.push_back({"[pt]", 2});
  GradedAlgebra inv("invariant " + algebra.name(), std::move(basis));

  // Embedding of the invariant basis into the ambient algebra.
  std::vector<AlgebraElement> embed(inv.dimension());
  embed[inv.unit()] = algebra.element(algebra.unit());
  embed[inv.point()] = algebra.element(algebra.point());
  std::vector<std::size_t> sector_class(algebra.dimension(), 0);
  for (std::size_t c = 1; c < k; ++c) {
    for (auto g : classes.classes[c]) {
      const std::size_t idx = algebra.index_of(sector_label(g));
      embed[c].emplace(idx, CycNum(1L));
      sector_class[idx] = c;
    }
  }

  auto restrict_to_invariants = [&](const AlgebraElement& x) {
    AlgebraElement out;
    std::vector<std::optional<CycNum>> seen(k);
    std::vector<std::size_t> count(k, 0);
    for (const auto& [idx, coeff] : x) {
      if (idx == algebra.unit()) {
        add_term(out, inv.unit(), coeff);
      } else if (idx == algebra.point()) {
        add_term(out, inv.point(), coeff);
      } else {
        const std::size_t c = sector_class[idx];
        if (c == 0) throw std::domain_error("product leaves the span of the twisted sectors");
        if (seen[c] && !(*seen[c] == coeff)) throw std::domain_error("product is not invariant under conjugation");
        seen[c] = coeff;
        ++count[c];
      }
    }
    for (std::size_t c = 1; c < k; ++c) {
      if (!seen[c]) continue;
      if (count[c] != classes.class_sizes[c]) throw std::domain_error("product is not invariant under conjugation");
      add_term(out, c, *seen[c]);
    }
    return out;
  };

  for (std::size_t i = 0; i < inv.dimension(); ++i) {
    for (std::size_t j = 0; j < inv.dimension(); ++j) {
      inv.set_product(i, j, restrict_to_invariants(algebra.multiply(embed[i], embed[j])));
    }
  }
  return inv;
}

}  // namespace mckay
