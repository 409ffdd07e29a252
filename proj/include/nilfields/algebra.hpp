#pragma once

#include <cstddef>
#include <optional>

#include "nilfields/matrix.hpp"
#include "nilfields/rational.hpp"
#include "nilfields/tensor3.hpp"

namespace nilfields {

/// Structure constants of a bracket over an orthonormal basis:
/// at(i, j, k) is the coefficient of e_k in [e_i, e_j]. Indices are 0-based
/// in code; messages and JSON payloads are 1-based.
class StructureConstants {
 public:
  StructureConstants() = default;
  explicit StructureConstants(std::size_t dim) : c_(dim) {}

  std::size_t dim() const { return c_.dim(); }

  const Rational& at(std::size_t i, std::size_t j, std::size_t k) const {
    return c_.at(i, j, k);
  }

  /// Raw single-entry write; the antisymmetric partner is not touched.
  void set_entry(std::size_t i, std::size_t j, std::size_t k,
                 const Rational& value) {
    c_.at(i, j, k) = value;
  }

  /// Sets the coefficient of e_k in [e_i, e_j] together with its
  /// antisymmetric partner. Requires i != j.
  void set_bracket(std::size_t i, std::size_t j, std::size_t k,
                   const Rational& value);

  bool operator==(const StructureConstants& other) const = default;

 private:
  Tensor3 c_;
};

/// A validated metric Lie algebra over an orthonormal basis (the metric is
/// the identity in this frame). Construction checks antisymmetry and the
/// Jacobi identity eagerly and caches center, derived subalgebra, nilpotency
/// step and unimodularity. Immutable afterwards.
class MetricLieAlgebra {
 public:
  explicit MetricLieAlgebra(StructureConstants constants);

  std::size_t dim() const { return constants_.dim(); }
  const StructureConstants& constants() const { return constants_; }

  RationalVector bracket(const RationalVector& x, const RationalVector& y) const;

  /// Matrix of ad_x (columns are the images of the basis vectors).
  RationalMatrix ad(const RationalVector& x) const;
  Rational ad_trace(const RationalVector& x) const;

  const SolutionSpace& center() const { return center_; }
  const SolutionSpace& derived_subalgebra() const { return derived_; }

  /// Nilpotency step, or nullopt when the lower central series stabilizes
  /// above zero.
  std::optional<std::size_t> nilpotency_step() const { return step_; }

  bool is_unimodular() const { return unimodular_; }

 private:
  void validate() const;
  SolutionSpace compute_center() const;
  SolutionSpace compute_derived() const;
  std::optional<std::size_t> compute_step() const;
  bool compute_unimodular() const;

  StructureConstants constants_;
  SolutionSpace center_;
  SolutionSpace derived_;
  std::optional<std::size_t> step_;
  bool unimodular_ = false;
};

}  // namespace nilfields
