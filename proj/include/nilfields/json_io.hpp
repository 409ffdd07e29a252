#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "nilfields/algebra.hpp"
#include "nilfields/catalog.hpp"
#include "nilfields/classifier.hpp"
#include "nilfields/connection.hpp"
#include "nilfields/matrix.hpp"
#include "nilfields/verify.hpp"

namespace nilfields {

using Json = nlohmann::ordered_json;

/// Canonical dump: 2-space indent, trailing newline. Emitted JSON parses and
/// re-serializes byte-identically.
std::string dump_json(const Json& j);

// Algebra schema: { "dim": n, "brackets": [ { "i": i, "j": j, "coeffs":
// { "k": "p/q", ... } }, ... ] } with 1-based indices, i < j, omitted pairs
// zero and the antisymmetric completion implicit.
Json algebra_to_json(const MetricLieAlgebra& alg);
MetricLieAlgebra algebra_from_json(const Json& j);
MetricLieAlgebra load_algebra_file(const std::string& path);

// Nonzero connection entries sorted lexicographically by (k, i, j), 1-based.
Json christoffel_to_json(const ChristoffelTensor& g);

Json solution_space_to_json(const SolutionSpace& space);
Json feasibility_to_json(const Feasibility& f);

Json report_to_json(const ClassificationReport& report);
Json verify_report_to_json(const VerifyReport& report);

Json grid_to_json(const std::vector<GridPoint>& grid);
std::vector<GridPoint> grid_from_json(const Json& j);
std::vector<GridPoint> load_grid_file(const std::string& path);

}  // namespace nilfields
