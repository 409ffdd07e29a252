#include "nilfields/connection.hpp"

#include "nilfields/errors.hpp"

namespace nilfields {

ChristoffelTensor christoffel(const MetricLieAlgebra& alg) {
  const std::size_t n = alg.dim();
  const auto& c = alg.constants();
  Tensor3 gamma(n);
  // Gamma^k_ij = (c^k_ij - c^j_ik - c^i_jk) / 2 in an orthonormal frame.
  const Rational half(1, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        gamma.at(i, j, k) =
            half * (c.at(i, j, k) - c.at(i, k, j) - c.at(j, k, i));
  return ChristoffelTensor(std::move(gamma));
}

RationalVector nabla(const ChristoffelTensor& g, const RationalVector& u,
                     const RationalVector& v) {
  const std::size_t n = g.dim();
  if (u.size() != n) throw DimensionMismatch(n, u.size());
  if (v.size() != n) throw DimensionMismatch(n, v.size());
  RationalVector out(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j] == 0) continue;
      const Rational uv = u[i] * v[j];
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& ga = g.at(i, j, k);
        if (ga != 0) out[k] += uv * ga;
      }
    }
  }
  return out;
}

RationalVector nabla_invariant(const ChristoffelTensor& g, std::size_t i,
                               const RationalVector& x) {
  if (i >= g.dim()) throw IndexOutOfRange(i, g.dim());
  return nabla(g, unit_vector(g.dim(), i), x);
}

Rational divergence(const ChristoffelTensor& g, const RationalVector& x) {
  const std::size_t n = g.dim();
  if (x.size() != n) throw DimensionMismatch(n, x.size());
  Rational out(0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (x[k] != 0) out += x[k] * g.at(i, k, i);
  return out;
}

RationalVector ConnectionLieDerivative::value(std::size_t i,
                                              std::size_t j) const {
  const std::size_t n = dim();
  if (i >= n) throw IndexOutOfRange(i, n);
  if (j >= n) throw IndexOutOfRange(j, n);
  RationalVector out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = t_.at(i, j, k);
  return out;
}

ConnectionLieDerivative lie_derivative_connection(const MetricLieAlgebra& alg,
                                                  const ChristoffelTensor& g,
                                                  const RationalVector& x) {
  const std::size_t n = alg.dim();
  if (x.size() != n) throw DimensionMismatch(n, x.size());
  Tensor3 t(n);
  for (std::size_t i = 0; i < n; ++i) {
    const RationalVector ei = unit_vector(n, i);
    const RationalVector x_ei = alg.bracket(x, ei);
    for (std::size_t j = 0; j < n; ++j) {
      const RationalVector ej = unit_vector(n, j);
      RationalVector term = alg.bracket(x, nabla(g, ei, ej));
      const RationalVector second = nabla(g, x_ei, ej);
      const RationalVector third = nabla(g, ei, alg.bracket(x, ej));
      for (std::size_t k = 0; k < n; ++k)
        t.at(i, j, k) = term[k] - second[k] - third[k];
    }
  }
  return ConnectionLieDerivative(std::move(t));
}

}  // namespace nilfields
