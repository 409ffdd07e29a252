#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nilfields/algebra.hpp"
#include "nilfields/rational.hpp"

namespace nilfields {

enum class Family { Center1, Center2, Center3, Heisenberg3, Abelian };

std::string_view family_name(Family family);
std::optional<Family> family_from_name(std::string_view name);

/// Parameters selecting one member of a catalog family. lambda/mu apply to
/// the parameterized families (lambda >= mu > 0 where both are present);
/// dim applies to the abelian family only.
struct FamilySpec {
  Family family = Family::Abelian;
  Rational lambda = 1;
  Rational mu = 1;
  std::size_t dim = 5;

  bool operator==(const FamilySpec&) const = default;
};

std::string algebra_id(const FamilySpec& spec);

/// Dim-5, center span{e5}: [e1,e2] = lambda e5, [e3,e4] = mu e5.
MetricLieAlgebra family_center1(const Rational& lambda, const Rational& mu);

/// Dim-5, center span{e4,e5}: [e1,e2] = lambda e4, [e1,e3] = mu e5.
MetricLieAlgebra family_center2(const Rational& lambda, const Rational& mu);

/// Dim-5, center span{e3,e4,e5}: [e1,e2] = lambda e3.
MetricLieAlgebra family_center3(const Rational& lambda);

/// Dim-3 analogue of the three-dimensional-center family.
MetricLieAlgebra heisenberg3(const Rational& lambda);

/// The zero bracket in dimension n.
MetricLieAlgebra abelian(std::size_t n);

MetricLieAlgebra make_algebra(const FamilySpec& spec);

struct GridPoint {
  Rational lambda;
  Rational mu;

  bool operator==(const GridPoint&) const = default;
};

/// All pairs (lambda, mu) with values in {1/2, 1, 3/2, 2, 3} and
/// lambda >= mu.
std::vector<GridPoint> default_grid();

/// Grid restricted to a family: center3 keeps one point per distinct lambda;
/// the two-parameter families keep the points with lambda >= mu > 0.
std::vector<GridPoint> grid_for(Family family, const std::vector<GridPoint>& grid);

}  // namespace nilfields
