#pragma once

#include <cstddef>

#include "nilfields/algebra.hpp"
#include "nilfields/rational.hpp"
#include "nilfields/tensor3.hpp"

namespace nilfields {

/// Levi-Civita connection coefficients in the orthonormal frame:
/// at(i, j, k) is the coefficient of e_k in nabla_{e_i} e_j.
class ChristoffelTensor {
 public:
  ChristoffelTensor() = default;
  explicit ChristoffelTensor(Tensor3 gamma) : gamma_(std::move(gamma)) {}

  std::size_t dim() const { return gamma_.dim(); }
  const Rational& at(std::size_t i, std::size_t j, std::size_t k) const {
    return gamma_.at(i, j, k);
  }

  bool operator==(const ChristoffelTensor& other) const = default;

 private:
  Tensor3 gamma_;
};

/// Koszul formula in the orthonormal frame. The single source of truth for
/// the connection; the published per-family tables serve as test fixtures.
ChristoffelTensor christoffel(const MetricLieAlgebra& alg);

/// nabla_u v for invariant u, v (bilinear in the coordinates).
RationalVector nabla(const ChristoffelTensor& g, const RationalVector& u,
                     const RationalVector& v);

/// nabla_{e_i} x.
RationalVector nabla_invariant(const ChristoffelTensor& g, std::size_t i,
                               const RationalVector& x);

/// div x = sum_i <nabla_{e_i} x, e_i>.
Rational divergence(const ChristoffelTensor& g, const RationalVector& x);

/// (L_X nabla)(e_i, e_j) expressed on the basis: at(i, j, k) is the e_k
/// coefficient. Symmetric in (i, j) since the connection is torsion-free.
class ConnectionLieDerivative {
 public:
  ConnectionLieDerivative() = default;
  explicit ConnectionLieDerivative(Tensor3 t) : t_(std::move(t)) {}

  std::size_t dim() const { return t_.dim(); }
  const Rational& at(std::size_t i, std::size_t j, std::size_t k) const {
    return t_.at(i, j, k);
  }
  RationalVector value(std::size_t i, std::size_t j) const;

  bool operator==(const ConnectionLieDerivative& other) const = default;

 private:
  Tensor3 t_;
};

/// Full three-term Lie derivative of the connection,
///   (L_X nabla)(u, v) = [X, nabla_u v] - nabla_{[X,u]} v - nabla_u [X,v],
/// evaluated through bracket and nabla. The two trailing terms are nonzero
/// on these algebras, so no shortcut is taken.
ConnectionLieDerivative lie_derivative_connection(const MetricLieAlgebra& alg,
                                                  const ChristoffelTensor& g,
                                                  const RationalVector& x);

}  // namespace nilfields
