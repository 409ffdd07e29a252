#pragma once

#include <cstddef>
#include <vector>

#include "nilfields/algebra.hpp"
#include "nilfields/matrix.hpp"
#include "nilfields/rational.hpp"

namespace nilfields {

/// Basis of invariant p-forms: strictly increasing p-tuples from {0..n-1} in
/// lexicographic order. Degree 0 has the single empty tuple.
class FormBasis {
 public:
  FormBasis(std::size_t dim, std::size_t degree);

  std::size_t dim() const { return dim_; }
  std::size_t degree() const { return degree_; }
  std::size_t size() const { return tuples_.size(); }
  const std::vector<std::vector<std::size_t>>& multi_indices() const {
    return tuples_;
  }
  std::size_t index_of(const std::vector<std::size_t>& tuple) const;

  /// "e^1^e^2" style label for printing, 1-based.
  std::string label(std::size_t index) const;

 private:
  std::size_t dim_ = 0;
  std::size_t degree_ = 0;
  std::vector<std::vector<std::size_t>> tuples_;
};

struct InvariantForm {
  std::size_t degree = 0;
  RationalVector coords;

  bool operator==(const InvariantForm&) const = default;
};

/// Metric dual of an invariant field; the identity on coordinates in an
/// orthonormal frame.
InvariantForm flat(const RationalVector& x);

/// Matrix of the exterior derivative on invariant p-forms in the
/// lexicographic bases, shape C(n,p+1) x C(n,p). Degree-1 convention:
/// (d w)(x, y) = -w([x, y]).
RationalMatrix d_matrix(const MetricLieAlgebra& alg, std::size_t p);

/// Adjoint of d with respect to the orthonormal form bases, shape
/// C(n,p-1) x C(n,p). Valid on invariant forms of unimodular algebras only;
/// throws NotUnimodular otherwise.
RationalMatrix codifferential_matrix(const MetricLieAlgebra& alg, std::size_t p);

/// Hodge Laplacian d delta + delta d on invariant p-forms.
RationalMatrix laplacian_matrix(const MetricLieAlgebra& alg, std::size_t p);

}  // namespace nilfields
