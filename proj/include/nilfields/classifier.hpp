#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilfields/algebra.hpp"
#include "nilfields/catalog.hpp"
#include "nilfields/connection.hpp"
#include "nilfields/forms.hpp"
#include "nilfields/matrix.hpp"

namespace nilfields {

enum class FieldClass { Killing, Conformal, Affine, Projective, Concurrent, Harmonic };

constexpr std::array<FieldClass, 6> kAllFieldClasses = {
    FieldClass::Killing,    FieldClass::Conformal,  FieldClass::Affine,
    FieldClass::Projective, FieldClass::Concurrent, FieldClass::Harmonic};

std::string_view field_class_name(FieldClass c);

// System assembly is exposed separately so tests can check rank/nullity and
// residuals on the raw matrices.

/// One row per unordered pair (i <= j): sum_k a_k (G^j_ik + G^i_jk) = 0.
RationalMatrix killing_system(const MetricLieAlgebra& alg,
                              const ChristoffelTensor& g);

/// Connection-free characterization: ad_X skew-symmetric. One row per
/// unordered basis pair.
RationalMatrix ad_skew_system(const MetricLieAlgebra& alg);

/// Killing rows with the trace term (2 div X / n) delta_ij moved to the left.
RationalMatrix conformal_system(const MetricLieAlgebra& alg,
                                const ChristoffelTensor& g);

/// Rows indexed by (pair (i <= j), component): (L_X nabla)(e_i, e_j) = 0.
RationalMatrix affine_system(const MetricLieAlgebra& alg,
                             const ChristoffelTensor& g);

/// Joint system over (a, alpha) in 2n unknowns:
/// (L_X nabla)(e_i, e_j) - alpha_i e_j - alpha_j e_i = 0.
RationalMatrix projective_system(const MetricLieAlgebra& alg,
                                 const ChristoffelTensor& g);

struct ConcurrentSystem {
  RationalMatrix matrix;  // rows indexed by (i, component l)
  RationalVector rhs;     // delta^l_i
};

/// Inhomogeneous system nabla_{e_i} X = e_i for every i.
ConcurrentSystem concurrent_system(const MetricLieAlgebra& alg,
                                   const ChristoffelTensor& g);

SolutionSpace killing_space(const MetricLieAlgebra& alg,
                            const ChristoffelTensor& g);
SolutionSpace ad_skew_space(const MetricLieAlgebra& alg);
SolutionSpace conformal_space(const MetricLieAlgebra& alg,
                              const ChristoffelTensor& g);
SolutionSpace affine_space(const MetricLieAlgebra& alg,
                           const ChristoffelTensor& g);

struct ProjectiveSolution {
  SolutionSpace field_space;   // joint (a, alpha) solutions, canonical
  SolutionSpace x_projection;  // projection to the a-block
  bool alpha_forced_zero = false;

  bool operator==(const ProjectiveSolution&) const = default;
};

ProjectiveSolution projective_space(const MetricLieAlgebra& alg,
                                    const ChristoffelTensor& g);

Feasibility concurrent_solve(const MetricLieAlgebra& alg,
                             const ChristoffelTensor& g);

/// Fields whose dual 1-form lies in the degree-1 Laplacian kernel. Throws
/// NotUnimodular on non-unimodular input.
SolutionSpace harmonic_space(const MetricLieAlgebra& alg,
                             const ChristoffelTensor& g);

/// The published expansion of delta(d X-flat), evaluated with the summation
/// read over unordered index pairs i < k:
///   delta(d X-flat)(e_j) = -sum_{i<k} (G^k_ii <X,[e_k,e_j]> +
///                                      G^k_ij <X,[e_i,e_k]>).
/// Kept verbatim as a comparison path; it reproduces the published scalars
/// where they are self-consistent, and its kernel matches the Laplacian
/// path on every catalog family. Scalars between the two paths differ by a
/// factor of 2 there.
InvariantForm published_delta_d_flat(const MetricLieAlgebra& alg,
                                 const ChristoffelTensor& g,
                                 const RationalVector& x);

/// {X : published_delta_d_flat(X) = 0 and div X = 0} as a solution space; the
/// comparison kernel for the harmonic two-path check.
SolutionSpace published_harmonic_space(const MetricLieAlgebra& alg,
                                   const ChristoffelTensor& g);

struct Expectation {
  std::string source;    // citation, e.g. "Theorem 3"
  std::string expected;
  std::string computed;
  bool matches = false;

  bool operator==(const Expectation&) const = default;
};

struct ClassificationReport {
  std::string algebra_id;
  // Ordered (name, canonical rational string) pairs; empty for plain inputs.
  std::vector<std::pair<std::string, std::string>> parameters;
  std::size_t dim = 0;

  SolutionSpace killing;
  SolutionSpace conformal;
  SolutionSpace affine;
  ProjectiveSolution projective;
  Feasibility concurrent;
  std::optional<SolutionSpace> harmonic;  // nullopt: not computed
  std::string harmonic_note;              // reason when not computed

  std::vector<Expectation> expectations;
};

/// Classify an arbitrary validated algebra. Harmonic is skipped (with a
/// note) when the algebra is not unimodular; everything else is computed.
ClassificationReport classify(const MetricLieAlgebra& alg,
                              const std::string& algebra_id);

/// Classify a catalog member; the three parameterized center families also
/// get the published-expectation rows evaluated at this parameter point.
ClassificationReport classify_family(const FamilySpec& spec);

}  // namespace nilfields
