#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "nilfields/catalog.hpp"
#include "nilfields/classifier.hpp"
#include "nilfields/errors.hpp"
#include "nilfields/json_io.hpp"
#include "nilfields/render.hpp"
#include "nilfields/verify.hpp"

namespace {

using namespace nilfields;

struct Selection {
  std::string family;
  std::string lambda;
  std::string mu;
  std::size_t dim = 5;
  std::string algebra_path;
};

void add_selection_flags(CLI::App* cmd, Selection* sel) {
  cmd->add_option("--family", sel->family,
                  "catalog family (center1, center2, center3, heisenberg3, abelian)");
  cmd->add_option("--lambda", sel->lambda, "rational parameter, e.g. 3/2");
  cmd->add_option("--mu", sel->mu, "rational parameter, e.g. 1/2");
  cmd->add_option("--dim", sel->dim, "dimension (abelian family only)");
  cmd->add_option("--algebra", sel->algebra_path, "path to an algebra JSON file");
}

FamilySpec spec_from_selection(const Selection& sel) {
  const auto family = family_from_name(sel.family);
  if (!family) throw ParseError("unknown family: \"" + sel.family + "\"");
  FamilySpec spec;
  spec.family = *family;
  spec.dim = sel.dim;
  switch (*family) {
    case Family::Center1:
    case Family::Center2:
      if (sel.lambda.empty() || sel.mu.empty())
        throw ParseError("family " + sel.family +
                         " requires --lambda and --mu");
      spec.lambda = parse_rational(sel.lambda);
      spec.mu = parse_rational(sel.mu);
      break;
    case Family::Center3:
    case Family::Heisenberg3:
      if (sel.lambda.empty())
        throw ParseError("family " + sel.family + " requires --lambda");
      spec.lambda = parse_rational(sel.lambda);
      spec.mu = spec.lambda;
      break;
    case Family::Abelian:
      break;
  }
  return spec;
}

MetricLieAlgebra algebra_from_selection(const Selection& sel) {
  if (!sel.algebra_path.empty()) return load_algebra_file(sel.algebra_path);
  if (sel.family.empty())
    throw ParseError("select an algebra with --family or --algebra");
  return make_algebra(spec_from_selection(sel));
}

int cmd_validate(const Selection& sel, bool json) {
  const MetricLieAlgebra alg = algebra_from_selection(sel);
  if (json) {
    Json j;
    j["dim"] = alg.dim();
    if (alg.nilpotency_step().has_value())
      j["step"] = *alg.nilpotency_step();
    else
      j["step"] = "not nilpotent";
    j["center"] = solution_space_to_json(alg.center());
    j["derived"] = solution_space_to_json(alg.derived_subalgebra());
    j["unimodular"] = alg.is_unimodular();
    std::cout << dump_json(j);
  } else {
    std::cout << render_validate_text(alg);
  }
  return 0;
}

int cmd_christoffel(const Selection& sel, bool json) {
  const MetricLieAlgebra alg = algebra_from_selection(sel);
  const ChristoffelTensor g = christoffel(alg);
  if (json)
    std::cout << dump_json(christoffel_to_json(g));
  else
    std::cout << render_christoffel_text(g);
  return 0;
}

int cmd_classify(const Selection& sel, bool json) {
  ClassificationReport report;
  if (!sel.algebra_path.empty()) {
    const MetricLieAlgebra alg = load_algebra_file(sel.algebra_path);
    report = classify(alg, sel.algebra_path);
  } else {
    if (sel.family.empty())
      throw ParseError("select an algebra with --family or --algebra");
    report = classify_family(spec_from_selection(sel));
  }
  if (json)
    std::cout << dump_json(report_to_json(report));
  else
    std::cout << render_report_text(report);
  return 0;
}

int cmd_verify_paper(const std::string& grid_arg, bool json) {
  std::vector<GridPoint> grid;
  if (grid_arg.empty() || grid_arg == "default")
    grid = default_grid();
  else
    grid = load_grid_file(grid_arg);
  const VerifyReport report = verify_paper(grid, SweepMode::Parallel);
  if (json)
    std::cout << dump_json(verify_report_to_json(report));
  else
    std::cout << render_verify_text(report);
  return report.any_differs() ? 2 : 0;
}

int cmd_families(bool json) {
  if (!json) {
    std::cout << render_families_text();
    return 0;
  }
  Json out = Json::array();
  out.push_back(Json{{"name", "center1"},
                     {"dim", 5},
                     {"parameters", Json::array({"lambda", "mu"})},
                     {"constraints", "lambda >= mu > 0"}});
  out.push_back(Json{{"name", "center2"},
                     {"dim", 5},
                     {"parameters", Json::array({"lambda", "mu"})},
                     {"constraints", "lambda >= mu > 0"}});
  out.push_back(Json{{"name", "center3"},
                     {"dim", 5},
                     {"parameters", Json::array({"lambda"})},
                     {"constraints", "lambda > 0"}});
  out.push_back(Json{{"name", "heisenberg3"},
                     {"dim", 3},
                     {"parameters", Json::array({"lambda"})},
                     {"constraints", "lambda > 0"}});
  out.push_back(Json{{"name", "abelian"},
                     {"dim", 0},
                     {"parameters", Json::array({"dim"})},
                     {"constraints", "dim >= 1"}});
  std::cout << dump_json(out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact classification of invariant geometric vector fields on "
      "metric nilpotent Lie algebras"};
  app.require_subcommand(1);
  app.fallthrough();  // accepts --json both before and after the subcommand

  bool json = false;
  app.add_flag("--json", json, "emit machine-readable JSON");

  Selection sel;
  std::string grid_arg;

  auto* validate = app.add_subcommand(
      "validate", "validate an algebra and print its structural invariants");
  add_selection_flags(validate, &sel);

  auto* christoffel_cmd = app.add_subcommand(
      "christoffel", "print the nonzero Levi-Civita connection coefficients");
  add_selection_flags(christoffel_cmd, &sel);

  auto* classify_cmd = app.add_subcommand(
      "classify", "solve all six field classes and report the spaces");
  add_selection_flags(classify_cmd, &sel);

  auto* verify = app.add_subcommand(
      "verify-paper",
      "sweep the three families over a parameter grid and compare against "
      "the ledger of published claims");
  verify->add_option("--grid", grid_arg, "\"default\" or a grid JSON file");

  auto* families =
      app.add_subcommand("families", "list catalog families and constraints");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Normalize CLI11's exit codes: anything rejected at parse time is an
    // input error unless it is --help output.
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(validate)) return cmd_validate(sel, json);
    if (app.got_subcommand(christoffel_cmd)) return cmd_christoffel(sel, json);
    if (app.got_subcommand(classify_cmd)) return cmd_classify(sel, json);
    if (app.got_subcommand(verify)) return cmd_verify_paper(grid_arg, json);
    if (app.got_subcommand(families)) return cmd_families(json);
  } catch (const nilfields::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
