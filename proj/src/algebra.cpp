#include "nilfields/algebra.hpp"

#include <utility>

#include "nilfields/errors.hpp"

namespace nilfields {

void StructureConstants::set_bracket(std::size_t i, std::size_t j,
                                     std::size_t k, const Rational& value) {
  if (i == j) throw AntisymmetryViolation(i + 1, j + 1, k + 1);
  c_.at(i, j, k) = value;
  c_.at(j, i, k) = -value;
}

MetricLieAlgebra::MetricLieAlgebra(StructureConstants constants)
    : constants_(std::move(constants)) {
  validate();
  center_ = compute_center();
  derived_ = compute_derived();
  step_ = compute_step();
  unimodular_ = compute_unimodular();
}

void MetricLieAlgebra::validate() const {
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (constants_.at(i, j, k) != -constants_.at(j, i, k))
          throw AntisymmetryViolation(i + 1, j + 1, k + 1);

  // Jacobi: sum over m of c^m_ij c^l_mk + c^m_jk c^l_mi + c^m_ki c^l_mj.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Rational sum(0);
          for (std::size_t m = 0; m < n; ++m) {
            sum += constants_.at(i, j, m) * constants_.at(m, k, l);
            sum += constants_.at(j, k, m) * constants_.at(m, i, l);
            sum += constants_.at(k, i, m) * constants_.at(m, j, l);
          }
          if (sum != 0) throw JacobiViolation(i + 1, j + 1, k + 1, l + 1);
        }
}

RationalVector MetricLieAlgebra::bracket(const RationalVector& x,
                                         const RationalVector& y) const {
  const std::size_t n = dim();
  if (x.size() != n) throw DimensionMismatch(n, x.size());
  if (y.size() != n) throw DimensionMismatch(n, y.size());
  RationalVector out(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      const Rational xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& c = constants_.at(i, j, k);
        if (c != 0) out[k] += xy * c;
      }
    }
  }
  return out;
}

RationalMatrix MetricLieAlgebra::ad(const RationalVector& x) const {
  const std::size_t n = dim();
  if (x.size() != n) throw DimensionMismatch(n, x.size());
  RationalMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& c = constants_.at(i, j, k);
        if (c != 0) m.at(k, j) += x[i] * c;
      }
    }
  }
  return m;
}

Rational MetricLieAlgebra::ad_trace(const RationalVector& x) const {
  const std::size_t n = dim();
  if (x.size() != n) throw DimensionMismatch(n, x.size());
  Rational tr(0);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) tr += x[i] * constants_.at(i, j, j);
  }
  return tr;
}

SolutionSpace MetricLieAlgebra::compute_center() const {
  const std::size_t n = dim();
  // x central iff sum_i x_i c^k_ij = 0 for every (j, k).
  RationalMatrix system(n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        system.at(j * n + k, i) = constants_.at(i, j, k);
  return nullspace(system);
}

SolutionSpace MetricLieAlgebra::compute_derived() const {
  const std::size_t n = dim();
  std::vector<RationalVector> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      RationalVector v(n);
      for (std::size_t k = 0; k < n; ++k) v[k] = constants_.at(i, j, k);
      if (!is_zero_vector(v)) gens.push_back(std::move(v));
    }
  return SolutionSpace::from_generators(n, gens);
}

std::optional<std::size_t> MetricLieAlgebra::compute_step() const {
  const std::size_t n = dim();
  // Lower central series; terms are nested, so a stalled dimension means the
  // series never reaches zero.
  SolutionSpace term = derived_;
  if (term.dimension() == 0) return 1;
  std::size_t step = 1;
  while (true) {
    std::vector<RationalVector> gens;
    for (std::size_t i = 0; i < n; ++i) {
      const RationalVector ei = unit_vector(n, i);
      for (const auto& v : term.basis()) {
        RationalVector w = bracket(ei, v);
        if (!is_zero_vector(w)) gens.push_back(std::move(w));
      }
    }
    SolutionSpace next = SolutionSpace::from_generators(n, gens);
    ++step;
    if (next.dimension() == 0) return step;
    if (next.dimension() == term.dimension()) return std::nullopt;
    term = std::move(next);
  }
}

bool MetricLieAlgebra::compute_unimodular() const {
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i) {
    Rational tr(0);
    for (std::size_t j = 0; j < n; ++j) tr += constants_.at(i, j, j);
    if (tr != 0) return false;
  }
  return true;
}

}  // namespace nilfields
