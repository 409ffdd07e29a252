#include "nilfields/classifier.hpp"

#include <utility>

#include "nilfields/errors.hpp"

namespace nilfields {

namespace {

std::size_t pair_count(std::size_t n) { return n * (n + 1) / 2; }

Rational inner_with_bracket(const StructureConstants& c,
                            const RationalVector& x, std::size_t a,
                            std::size_t b) {
  Rational out(0);
  for (std::size_t m = 0; m < x.size(); ++m)
    if (x[m] != 0) out += x[m] * c.at(a, b, m);
  return out;
}

}  // namespace

std::string_view field_class_name(FieldClass c) {
  switch (c) {
    case FieldClass::Killing: return "Killing";
    case FieldClass::Conformal: return "Conformal";
    case FieldClass::Affine: return "Affine";
    case FieldClass::Projective: return "Projective";
    case FieldClass::Concurrent: return "Concurrent";
    case FieldClass::Harmonic: return "Harmonic";
  }
  return "unknown";
}

RationalMatrix killing_system(const MetricLieAlgebra& alg,
                              const ChristoffelTensor& g) {
  const std::size_t n = alg.dim();
  RationalMatrix m(pair_count(n), n);
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j, ++row)
      for (std::size_t k = 0; k < n; ++k)
        m.at(row, k) = g.at(i, k, j) + g.at(j, k, i);
  return m;
}

RationalMatrix ad_skew_system(const MetricLieAlgebra& alg) {
  const std::size_t n = alg.dim();
  const auto& c = alg.constants();
  RationalMatrix m(pair_count(n), n);
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j, ++row)
      for (std::size_t k = 0; k < n; ++k)
        m.at(row, k) = c.at(k, i, j) + c.at(k, j, i);
  return m;
}

RationalMatrix conformal_system(const MetricLieAlgebra& alg,
                                const ChristoffelTensor& g) {
  const std::size_t n = alg.dim();
  RationalVector div_row(n, Rational(0));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) div_row[k] += g.at(i, k, i);

  const Rational two_over_n(2, static_cast<long>(n));
  RationalMatrix m(pair_count(n), n);
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j, ++row)
      for (std::size_t k = 0; k < n; ++k) {
        m.at(row, k) = g.at(i, k, j) + g.at(j, k, i);
        if (i == j) m.at(row, k) -= two_over_n * div_row[k];
      }
  return m;
}

RationalMatrix affine_system(const MetricLieAlgebra& alg,
                             const ChristoffelTensor& g) {
  const std::size_t n = alg.dim();
  RationalMatrix m(pair_count(n) * n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto t = lie_derivative_connection(alg, g, unit_vector(n, k));
    std::size_t pair = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j, ++pair)
        for (std::size_t l = 0; l < n; ++l)
          m.at(pair * n + l, k) = t.at(i, j, l);
  }
  return m;
}

RationalMatrix projective_system(const MetricLieAlgebra& alg,
                                 const ChristoffelTensor& g) {
  const std::size_t n = alg.dim();
  RationalMatrix m(pair_count(n) * n, 2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto t = lie_derivative_connection(alg, g, unit_vector(n, k));
    std::size_t pair = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j, ++pair)
        for (std::size_t l = 0; l < n; ++l)
          m.at(pair * n + l, k) = t.at(i, j, l);
  }
  std::size_t pair = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j, ++pair)
      for (std::size_t l = 0; l < n; ++l) {
        if (j == l) m.at(pair * n + l, n + i) -= 1;
        if (i == l) m.at(pair * n + l, n + j) -= 1;
      }
  return m;
}

ConcurrentSystem concurrent_system(const MetricLieAlgebra& alg,
                                   const ChristoffelTensor& g) {
  const std::size_t n = alg.dim();
  ConcurrentSystem sys{RationalMatrix(n * n, n), RationalVector(n * n, Rational(0))};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      for (std::size_t k = 0; k < n; ++k)
        sys.matrix.at(i * n + l, k) = g.at(i, k, l);
      if (i == l) sys.rhs[i * n + l] = 1;
    }
  return sys;
}

SolutionSpace killing_space(const MetricLieAlgebra& alg,
                            const ChristoffelTensor& g) {
  return nullspace(killing_system(alg, g));
}

SolutionSpace ad_skew_space(const MetricLieAlgebra& alg) {
  return nullspace(ad_skew_system(alg));
}

SolutionSpace conformal_space(const MetricLieAlgebra& alg,
                              const ChristoffelTensor& g) {
  return nullspace(conformal_system(alg, g));
}

SolutionSpace affine_space(const MetricLieAlgebra& alg,
                           const ChristoffelTensor& g) {
  return nullspace(affine_system(alg, g));
}

ProjectiveSolution projective_space(const MetricLieAlgebra& alg,
                                    const ChristoffelTensor& g) {
  const std::size_t n = alg.dim();
  ProjectiveSolution out;
  out.field_space = nullspace(projective_system(alg, g));
  std::vector<RationalVector> projections;
  bool alpha_zero = true;
  for (const auto& v : out.field_space.basis()) {
    projections.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n));
    for (std::size_t m = n; m < 2 * n; ++m)
      if (v[m] != 0) alpha_zero = false;
  }
  out.x_projection = SolutionSpace::from_generators(n, projections);
  out.alpha_forced_zero = alpha_zero;
  return out;
}

Feasibility concurrent_solve(const MetricLieAlgebra& alg,
                             const ChristoffelTensor& g) {
  const auto sys = concurrent_system(alg, g);
  return solve_affine(sys.matrix, sys.rhs);
}

SolutionSpace harmonic_space(const MetricLieAlgebra& alg,
                             const ChristoffelTensor& /*g*/) {
  // flat() is the identity on coordinates, so the field space is exactly the
  // degree-1 Laplacian kernel.
  return nullspace(laplacian_matrix(alg, 1));
}

InvariantForm published_delta_d_flat(const MetricLieAlgebra& alg,
                                 const ChristoffelTensor& g,
                                 const RationalVector& x) {
  const std::size_t n = alg.dim();
  if (x.size() != n) throw DimensionMismatch(n, x.size());
  const auto& c = alg.constants();
  RationalVector coords(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    Rational sum(0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = i + 1; k < n; ++k) {
        const Rational& diag = g.at(i, i, k);
        if (diag != 0) sum += diag * inner_with_bracket(c, x, k, j);
        const Rational& mixed = g.at(i, j, k);
        if (mixed != 0) sum += mixed * inner_with_bracket(c, x, i, k);
      }
    coords[j] = -sum;
  }
  return InvariantForm{1, std::move(coords)};
}

SolutionSpace published_harmonic_space(const MetricLieAlgebra& alg,
                                   const ChristoffelTensor& g) {
  const std::size_t n = alg.dim();
  RationalMatrix system(n + 1, n);
  for (std::size_t m = 0; m < n; ++m) {
    const auto form = published_delta_d_flat(alg, g, unit_vector(n, m));
    for (std::size_t j = 0; j < n; ++j) system.at(j, m) = form.coords[j];
    system.at(n, m) = divergence(g, unit_vector(n, m));
  }
  return nullspace(system);
}

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

SolutionSpace coordinate_zero_space(std::size_t n,
                                    const std::vector<std::size_t>& zeroed) {
  std::vector<RationalVector> gens;
  for (std::size_t i = 0; i < n; ++i) {
    bool is_zeroed = false;
    for (auto z : zeroed) is_zeroed = is_zeroed || z == i;
    if (!is_zeroed) gens.push_back(unit_vector(n, i));
  }
  return SolutionSpace::from_generators(n, gens);
}

struct FamilyClaims {
  std::size_t center_dim;
  std::vector<std::size_t> harmonic_zeroed;  // 0-based coordinates forced to 0
  std::string harmonic_condition;
};

FamilyClaims claims_for(Family family) {
  switch (family) {
    case Family::Center1: return {1, {4}, "a_5 = 0"};
    case Family::Center2: return {2, {3, 4}, "a_4 = a_5 = 0"};
    case Family::Center3: return {3, {2}, "a_3 = 0"};
    default: return {0, {}, ""};
  }
}

std::vector<Expectation> family_expectations(const FamilySpec& spec,
                                             const MetricLieAlgebra& alg,
                                             const ChristoffelTensor& g,
                                             const ClassificationReport& r) {
  const FamilyClaims claims = claims_for(spec.family);
  std::vector<Expectation> rows;

  {  // Theorem 1: no invariant concurrent field.
    Expectation e;
    e.source = "Theorem 1";
    e.expected = "no invariant concurrent field (system infeasible)";
    if (const auto* infeasible = std::get_if<Infeasible>(&r.concurrent)) {
      e.computed = "infeasible (witness row " +
                   std::to_string(infeasible->witness_row + 1) + ")";
      e.matches = true;
    } else {
      e.computed = "feasible";
      e.matches = false;
    }
    rows.push_back(std::move(e));
  }

  {  // Theorem 2: projective = affine = center, with vanishing 1-form.
    Expectation e;
    e.source = "Theorem 2";
    e.expected = "projective = affine = center; associated 1-form zero; dim " +
                 std::to_string(claims.center_dim);
    const bool proj_eq_affine = r.projective.x_projection == r.affine;
    const bool affine_eq_center = r.affine == alg.center();
    e.computed = "alpha forced zero: " + yes_no(r.projective.alpha_forced_zero) +
                 "; x-projection = affine: " + yes_no(proj_eq_affine) +
                 "; affine = center: " + yes_no(affine_eq_center) + "; dim " +
                 std::to_string(r.affine.dimension());
    e.matches = r.projective.alpha_forced_zero && proj_eq_affine &&
                affine_eq_center && r.affine.dimension() == claims.center_dim;
    rows.push_back(std::move(e));
  }

  {  // Theorem 3: every invariant conformal field is Killing.
    Expectation e;
    e.source = "Theorem 3";
    e.expected = "conformal space = Killing space";
    const bool equal = r.conformal == r.killing;
    bool divergences_zero = true;
    for (const auto& v : r.conformal.basis())
      divergences_zero = divergences_zero && divergence(g, v) == 0;
    e.computed = "equal: " + yes_no(equal) + " (dim " +
                 std::to_string(r.conformal.dimension()) +
                 "); basis divergences zero: " + yes_no(divergences_zero);
    e.matches = equal && divergences_zero;
    rows.push_back(std::move(e));
  }

  {  // Theorem 4: the published dimension claim, reported beside the
     // two-path computation; the computed value never replaces the claim.
    Expectation e;
    e.source = "Theorem 4";
    e.expected = "invariant Killing algebra is four-dimensional";
    const bool two_path = r.killing == ad_skew_space(alg);
    e.computed = "dim " + std::to_string(r.killing.dimension()) +
                 "; two-path agreement (connection vs ad-skew): " +
                 yes_no(two_path);
    e.matches = two_path && r.killing.dimension() == 4;
    rows.push_back(std::move(e));
  }

  {  // Theorem 5: harmonic space via the Laplacian kernel.
    Expectation e;
    e.source = "Theorem 5";
    e.expected = "harmonic fields: " + claims.harmonic_condition + " (dim " +
                 std::to_string(alg.dim() - claims.harmonic_zeroed.size()) + ")";
    if (r.harmonic.has_value()) {
      const SolutionSpace expected_space =
          coordinate_zero_space(alg.dim(), claims.harmonic_zeroed);
      const bool condition = *r.harmonic == expected_space;
      const bool published_kernel = published_harmonic_space(alg, g) == *r.harmonic;
      e.computed = "dim " + std::to_string(r.harmonic->dimension()) +
                   "; condition space match: " + yes_no(condition) +
                   "; published-formula kernel identical: " + yes_no(published_kernel);
      e.matches = condition && published_kernel;
    } else {
      e.computed = "not computed: NotUnimodular";
      e.matches = false;
    }
    rows.push_back(std::move(e));
  }

  return rows;
}

}  // namespace

ClassificationReport classify(const MetricLieAlgebra& alg,
                              const std::string& algebra_id) {
  ClassificationReport r;
  r.algebra_id = algebra_id;
  r.dim = alg.dim();
  const ChristoffelTensor g = christoffel(alg);
  r.killing = killing_space(alg, g);
  r.conformal = conformal_space(alg, g);
  r.affine = affine_space(alg, g);
  r.projective = projective_space(alg, g);
  r.concurrent = concurrent_solve(alg, g);
  if (alg.is_unimodular()) {
    r.harmonic = harmonic_space(alg, g);
  } else {
    r.harmonic = std::nullopt;
    r.harmonic_note = "NotUnimodular";
  }
  return r;
}

ClassificationReport classify_family(const FamilySpec& spec) {
  const MetricLieAlgebra alg = make_algebra(spec);
  ClassificationReport r = classify(alg, algebra_id(spec));
  switch (spec.family) {
    case Family::Center1:
    case Family::Center2:
      r.parameters = {{"lambda", to_string(spec.lambda)},
                      {"mu", to_string(spec.mu)}};
      break;
    case Family::Center3:
    case Family::Heisenberg3:
      r.parameters = {{"lambda", to_string(spec.lambda)}};
      break;
    case Family::Abelian:
      break;
  }
  if (spec.family == Family::Center1 || spec.family == Family::Center2 ||
      spec.family == Family::Center3) {
    const ChristoffelTensor g = christoffel(alg);
    r.expectations = family_expectations(spec, alg, g, r);
  }
  return r;
}

}  // namespace nilfields
