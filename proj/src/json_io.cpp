#include "nilfields/json_io.hpp"

#include <fstream>
#include <map>
#include <set>

#include "nilfields/errors.hpp"

namespace nilfields {

namespace {

std::size_t parse_index(const Json& j, const char* key, std::size_t dim) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw ParseError(std::string("missing or non-integer \"") + key + "\"");
  const long long value = j[key].get<long long>();
  if (value < 1 || static_cast<std::size_t>(value) > dim)
    throw ParseError(std::string("index \"") + key + "\" = " +
                     std::to_string(value) + " outside 1.." +
                     std::to_string(dim));
  return static_cast<std::size_t>(value) - 1;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json algebra_to_json(const MetricLieAlgebra& alg) {
  const std::size_t n = alg.dim();
  const auto& c = alg.constants();
  Json brackets = Json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Json coeffs = Json::object();
      for (std::size_t k = 0; k < n; ++k)
        if (c.at(i, j, k) != 0)
          coeffs[std::to_string(k + 1)] = to_string(c.at(i, j, k));
      if (!coeffs.empty())
        brackets.push_back(Json{{"i", i + 1}, {"j", j + 1}, {"coeffs", coeffs}});
    }
  return Json{{"dim", n}, {"brackets", brackets}};
}

MetricLieAlgebra algebra_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer())
    throw ParseError("algebra JSON must be an object with integer \"dim\"");
  const long long dim_value = j["dim"].get<long long>();
  if (dim_value < 1) throw ZeroDimension();
  const auto n = static_cast<std::size_t>(dim_value);

  StructureConstants c(n);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  if (j.contains("brackets")) {
    if (!j["brackets"].is_array())
      throw ParseError("\"brackets\" must be an array");
    for (const auto& entry : j["brackets"]) {
      const std::size_t i = parse_index(entry, "i", n);
      const std::size_t jj = parse_index(entry, "j", n);
      if (i >= jj)
        throw ParseError("bracket pair requires i < j, got i=" +
                         std::to_string(i + 1) + ", j=" + std::to_string(jj + 1));
      if (!seen.insert({i, jj}).second)
        throw ParseError("duplicate bracket pair (i=" + std::to_string(i + 1) +
                         ", j=" + std::to_string(jj + 1) + ")");
      if (!entry.contains("coeffs") || !entry["coeffs"].is_object())
        throw ParseError("bracket entry requires a \"coeffs\" object");
      for (const auto& [key, value] : entry["coeffs"].items()) {
        std::size_t k = 0;
        try {
          k = std::stoul(key);
        } catch (const std::exception&) {
          throw ParseError("coeff key is not an index: \"" + key + "\"");
        }
        if (k < 1 || k > n)
          throw ParseError("coeff index " + key + " outside 1.." +
                           std::to_string(n));
        if (!value.is_string())
          throw ParseError("coeff values must be rational strings");
        c.set_bracket(i, jj, k - 1, parse_rational(value.get<std::string>()));
      }
    }
  }
  return MetricLieAlgebra(std::move(c));
}

MetricLieAlgebra load_algebra_file(const std::string& path) {
  return algebra_from_json(load_json_file(path));
}

Json christoffel_to_json(const ChristoffelTensor& g) {
  const std::size_t n = g.dim();
  Json entries = Json::array();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (g.at(i, j, k) != 0)
          entries.push_back(Json{{"k", k + 1},
                                 {"i", i + 1},
                                 {"j", j + 1},
                                 {"value", to_string(g.at(i, j, k))}});
  return Json{{"dim", n}, {"entries", entries}};
}

namespace {

Json vector_to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

}  // namespace

Json solution_space_to_json(const SolutionSpace& space) {
  Json basis = Json::array();
  for (const auto& v : space.basis()) basis.push_back(vector_to_json(v));
  return Json{{"ambient_dim", space.ambient_dim()},
              {"dimension", space.dimension()},
              {"basis", basis}};
}

Json feasibility_to_json(const Feasibility& f) {
  if (const auto* infeasible = std::get_if<Infeasible>(&f)) {
    return Json{{"infeasible", true},
                {"witness_row", infeasible->witness_row + 1}};
  }
  const auto& solution = std::get<AffineSolution>(f);
  return Json{{"infeasible", false},
              {"particular", vector_to_json(solution.particular)},
              {"homogeneous", solution_space_to_json(solution.homogeneous)}};
}

Json report_to_json(const ClassificationReport& report) {
  Json parameters = Json::object();
  for (const auto& [name, value] : report.parameters) parameters[name] = value;

  Json projective = solution_space_to_json(report.projective.x_projection);
  projective["alpha_forced_zero"] = report.projective.alpha_forced_zero;
  projective["joint_dimension"] = report.projective.field_space.dimension();

  Json harmonic;
  if (report.harmonic.has_value())
    harmonic = solution_space_to_json(*report.harmonic);
  else
    harmonic = Json{{"not_computed", report.harmonic_note}};

  Json per_class = Json::object();
  per_class["Killing"] = solution_space_to_json(report.killing);
  per_class["Conformal"] = solution_space_to_json(report.conformal);
  per_class["Affine"] = solution_space_to_json(report.affine);
  per_class["Projective"] = projective;
  per_class["Concurrent"] = feasibility_to_json(report.concurrent);
  per_class["Harmonic"] = harmonic;

  Json expectations = Json::array();
  for (const auto& e : report.expectations)
    expectations.push_back(Json{{"source", e.source},
                                {"expected", e.expected},
                                {"computed", e.computed},
                                {"verdict", e.matches ? "matches" : "differs"}});

  return Json{{"algebra_id", report.algebra_id},
              {"dim", report.dim},
              {"parameters", parameters},
              {"per_class", per_class},
              {"expectations", expectations}};
}

Json verify_report_to_json(const VerifyReport& report) {
  Json grid = Json::object();
  for (const auto& [family, count] : report.grid_sizes) grid[family] = count;
  Json rows = Json::array();
  for (const auto& row : report.rows)
    rows.push_back(Json{{"family", row.family},
                        {"source", row.source},
                        {"expected", row.expected},
                        {"computed", row.computed},
                        {"verdict", row.matches ? "matches" : "differs"}});
  Json notes = Json::array();
  for (const auto& note : report.notes) notes.push_back(note);
  return Json{{"grid_points", grid}, {"rows", rows}, {"notes", notes}};
}

Json grid_to_json(const std::vector<GridPoint>& grid) {
  Json out = Json::array();
  for (const auto& point : grid)
    out.push_back(Json{{"lambda", to_string(point.lambda)},
                       {"mu", to_string(point.mu)}});
  return out;
}

std::vector<GridPoint> grid_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("grid JSON must be an array");
  std::vector<GridPoint> grid;
  for (const auto& entry : j) {
    if (!entry.is_object() || !entry.contains("lambda") ||
        !entry.contains("mu") || !entry["lambda"].is_string() ||
        !entry["mu"].is_string())
      throw ParseError(
          "grid entries must be objects with rational strings "
          "\"lambda\" and \"mu\"");
    grid.push_back({parse_rational(entry["lambda"].get<std::string>()),
                    parse_rational(entry["mu"].get<std::string>())});
  }
  return grid;
}

std::vector<GridPoint> load_grid_file(const std::string& path) {
  return grid_from_json(load_json_file(path));
}

}  // namespace nilfields
