#include "nilfields/catalog.hpp"

#include <algorithm>

#include "nilfields/errors.hpp"

namespace nilfields {

namespace {

void require_positive(const Rational& value) {
  if (value <= 0) throw NonPositiveParameter(to_string(value));
}

void require_ordered(const Rational& lambda, const Rational& mu) {
  require_positive(mu);
  require_positive(lambda);
  if (lambda < mu)
    throw ParameterOrderViolation(to_string(lambda), to_string(mu));
}

}  // namespace

std::string_view family_name(Family family) {
  switch (family) {
    case Family::Center1: return "center1";
    case Family::Center2: return "center2";
    case Family::Center3: return "center3";
    case Family::Heisenberg3: return "heisenberg3";
    case Family::Abelian: return "abelian";
  }
  return "unknown";
}

std::optional<Family> family_from_name(std::string_view name) {
  if (name == "center1") return Family::Center1;
  if (name == "center2") return Family::Center2;
  if (name == "center3") return Family::Center3;
  if (name == "heisenberg3") return Family::Heisenberg3;
  if (name == "abelian") return Family::Abelian;
  return std::nullopt;
}

std::string algebra_id(const FamilySpec& spec) {
  std::string id(family_name(spec.family));
  switch (spec.family) {
    case Family::Center1:
    case Family::Center2:
      return id + "(lambda=" + to_string(spec.lambda) +
             ", mu=" + to_string(spec.mu) + ")";
    case Family::Center3:
    case Family::Heisenberg3:
      return id + "(lambda=" + to_string(spec.lambda) + ")";
    case Family::Abelian:
      return id + "(dim=" + std::to_string(spec.dim) + ")";
  }
  return id;
}

MetricLieAlgebra family_center1(const Rational& lambda, const Rational& mu) {
  require_ordered(lambda, mu);
  StructureConstants c(5);
  c.set_bracket(0, 1, 4, lambda);
  c.set_bracket(2, 3, 4, mu);
  return MetricLieAlgebra(std::move(c));
}

MetricLieAlgebra family_center2(const Rational& lambda, const Rational& mu) {
  require_ordered(lambda, mu);
  StructureConstants c(5);
  c.set_bracket(0, 1, 3, lambda);
  c.set_bracket(0, 2, 4, mu);
  return MetricLieAlgebra(std::move(c));
}

MetricLieAlgebra family_center3(const Rational& lambda) {
  require_positive(lambda);
  StructureConstants c(5);
  c.set_bracket(0, 1, 2, lambda);
  return MetricLieAlgebra(std::move(c));
}

MetricLieAlgebra heisenberg3(const Rational& lambda) {
  require_positive(lambda);
  StructureConstants c(3);
  c.set_bracket(0, 1, 2, lambda);
  return MetricLieAlgebra(std::move(c));
}

MetricLieAlgebra abelian(std::size_t n) {
  if (n == 0) throw ZeroDimension();
  return MetricLieAlgebra(StructureConstants(n));
}

MetricLieAlgebra make_algebra(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Center1: return family_center1(spec.lambda, spec.mu);
    case Family::Center2: return family_center2(spec.lambda, spec.mu);
    case Family::Center3: return family_center3(spec.lambda);
    case Family::Heisenberg3: return heisenberg3(spec.lambda);
    case Family::Abelian: return abelian(spec.dim);
  }
  throw Error("unknown family");
}

std::vector<GridPoint> default_grid() {
  const std::vector<Rational> values = {Rational(1, 2), Rational(1),
                                        Rational(3, 2), Rational(2),
                                        Rational(3)};
  std::vector<GridPoint> grid;
  for (const auto& lambda : values)
    for (const auto& mu : values)
      if (lambda >= mu) grid.push_back({lambda, mu});
  return grid;
}

std::vector<GridPoint> grid_for(Family family,
                                const std::vector<GridPoint>& grid) {
  // Points violating a family's parameter constraints are skipped, so one
  // grid file can drive all families.
  std::vector<GridPoint> out;
  if (family == Family::Center3 || family == Family::Heisenberg3) {
    for (const auto& point : grid) {
      if (point.lambda <= 0) continue;
      const bool seen = std::any_of(
          out.begin(), out.end(),
          [&](const GridPoint& p) { return p.lambda == point.lambda; });
      if (!seen) out.push_back({point.lambda, point.lambda});
    }
    return out;
  }
  for (const auto& point : grid)
    if (point.lambda >= point.mu && point.mu > 0) out.push_back(point);
  return out;
}

}  // namespace nilfields
