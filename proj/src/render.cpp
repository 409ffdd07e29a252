#include "nilfields/render.hpp"

#include <variant>

namespace nilfields {

namespace {

std::string render_space(const SolutionSpace& space) {
  std::string out = "{";
  for (std::size_t i = 0; i < space.basis().size(); ++i) {
    if (i) out += ", ";
    out += basis_combination(space.basis()[i]);
  }
  return out + "}";
}

std::string render_feasibility(const Feasibility& f) {
  if (const auto* infeasible = std::get_if<Infeasible>(&f))
    return "infeasible (witness row " +
           std::to_string(infeasible->witness_row + 1) + ")";
  const auto& solution = std::get<AffineSolution>(f);
  std::string out = "feasible: " + to_string(solution.particular);
  if (solution.homogeneous.dimension() > 0)
    out += " + span" + render_space(solution.homogeneous);
  return out;
}

}  // namespace

std::string render_validate_text(const MetricLieAlgebra& alg) {
  std::string out;
  out += "dim: " + std::to_string(alg.dim()) + "\n";
  if (alg.nilpotency_step().has_value())
    out += "step: " + std::to_string(*alg.nilpotency_step()) + "\n";
  else
    out += "step: not nilpotent\n";
  out += "center: " + render_space(alg.center()) + " (dim " +
         std::to_string(alg.center().dimension()) + ")\n";
  out += "derived: " + render_space(alg.derived_subalgebra()) + " (dim " +
         std::to_string(alg.derived_subalgebra().dimension()) + ")\n";
  out += std::string("unimodular: ") + (alg.is_unimodular() ? "yes" : "no") +
         "\n";
  return out;
}

std::string render_christoffel_text(const ChristoffelTensor& g) {
  const std::size_t n = g.dim();
  std::string out;
  std::size_t count = 0;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (g.at(i, j, k) != 0) {
          out += "Gamma^" + std::to_string(k + 1) + "_{" +
                 std::to_string(i + 1) + "," + std::to_string(j + 1) +
                 "} = " + to_string(g.at(i, j, k)) + "\n";
          ++count;
        }
  if (count == 0) return "no nonzero entries\n";
  return out;
}

std::string render_report_text(const ClassificationReport& report) {
  std::string out = "algebra: " + report.algebra_id + "\n";
  out += "dim: " + std::to_string(report.dim) + "\n";
  for (const auto& [name, value] : report.parameters)
    out += name + ": " + value + "\n";

  out += "Killing:    dim " + std::to_string(report.killing.dimension()) +
         "  basis " + render_space(report.killing) + "\n";
  out += "Conformal:  dim " + std::to_string(report.conformal.dimension()) +
         "  basis " + render_space(report.conformal) + "\n";
  out += "Affine:     dim " + std::to_string(report.affine.dimension()) +
         "  basis " + render_space(report.affine) + "\n";
  out += "Projective: x-dim " +
         std::to_string(report.projective.x_projection.dimension()) +
         "  basis " + render_space(report.projective.x_projection) +
         "  (alpha forced zero: " +
         (report.projective.alpha_forced_zero ? "yes" : "no") + ")\n";
  out += "Concurrent: " + render_feasibility(report.concurrent) + "\n";
  if (report.harmonic.has_value())
    out += "Harmonic:   dim " + std::to_string(report.harmonic->dimension()) +
           "  basis " + render_space(*report.harmonic) + "\n";
  else
    out += "Harmonic:   not computed: " + report.harmonic_note + "\n";

  if (!report.expectations.empty()) {
    out += "expectations:\n";
    for (const auto& e : report.expectations)
      out += "  [" + e.source + "] expected: " + e.expected +
             " | computed: " + e.computed + " | " +
             (e.matches ? "matches" : "differs") + "\n";
  }
  return out;
}

std::string render_verify_text(const VerifyReport& report) {
  std::string out;
  for (const auto& [family, count] : report.grid_sizes)
    out += family + ": " + std::to_string(count) + " grid points\n";
  for (const auto& row : report.rows)
    out += row.family + " | " + row.source + " | expected: " + row.expected +
           " | computed: " + row.computed + " | " +
           (row.matches ? "matches" : "differs") + "\n";
  for (const auto& note : report.notes) out += "note: " + note + "\n";
  return out;
}

std::string render_families_text() {
  return
      "center1      dim 5  [e1,e2] = lambda e5, [e3,e4] = mu e5  "
      "(lambda >= mu > 0)\n"
      "center2      dim 5  [e1,e2] = lambda e4, [e1,e3] = mu e5  "
      "(lambda >= mu > 0)\n"
      "center3      dim 5  [e1,e2] = lambda e3                   "
      "(lambda > 0)\n"
      "heisenberg3  dim 3  [e1,e2] = lambda e3                   "
      "(lambda > 0)\n"
      "abelian      dim n  all brackets zero                     "
      "(dim >= 1)\n";
}

}  // namespace nilfields
