#include "nilfields/verify.hpp"

#include <algorithm>
#include <utility>

#include "nilfields/classifier.hpp"
#include "nilfields/errors.hpp"
#include "nilfields/forms.hpp"

namespace nilfields {

namespace {

struct PointOutcome {
  std::vector<Expectation> expectations;
  bool adjoint_is_twice_published = false;
  bool kernels_identical = false;
  // center2 only: the misprinted table entry resolves to Gamma^2_41, and
  // Gamma^1_41 vanishes.
  bool anomaly_resolved = false;
  std::string error;
};

struct Task {
  Family family;
  GridPoint point;
};

PointOutcome evaluate_point(const Task& task) {
  PointOutcome out;
  FamilySpec spec;
  spec.family = task.family;
  spec.lambda = task.point.lambda;
  spec.mu = task.point.mu;
  const ClassificationReport report = classify_family(spec);
  out.expectations = report.expectations;

  const MetricLieAlgebra alg = make_algebra(spec);
  const ChristoffelTensor g = christoffel(alg);
  const std::size_t n = alg.dim();

  // Scalar comparison of the two delta(d X-flat) paths: the adjoint-path
  // matrix against the published expansion, column by column.
  const RationalMatrix laplacian = laplacian_matrix(alg, 1);
  RationalMatrix published(n, n);
  for (std::size_t m = 0; m < n; ++m) {
    const auto form = published_delta_d_flat(alg, g, unit_vector(n, m));
    for (std::size_t j = 0; j < n; ++j) published.at(j, m) = form.coords[j];
  }
  out.adjoint_is_twice_published = laplacian == published.scaled(Rational(2));
  if (report.harmonic.has_value())
    out.kernels_identical = published_harmonic_space(alg, g) == *report.harmonic;
  if (task.family == Family::Center2)
    out.anomaly_resolved = g.at(3, 0, 1) == -task.point.lambda / 2 &&
                           g.at(3, 0, 0) == 0;
  return out;
}

}  // namespace

bool VerifyReport::any_differs() const {
  for (const auto& row : rows)
    if (!row.matches) return true;
  return false;
}

VerifyReport verify_paper(const std::vector<GridPoint>& grid, SweepMode mode) {
  const Family families[] = {Family::Center1, Family::Center2, Family::Center3};

  std::vector<Task> tasks;
  VerifyReport report;
  for (Family family : families) {
    auto points = grid_for(family, grid);
    // Merge order is (family, lambda, mu) regardless of file order.
    std::sort(points.begin(), points.end(),
              [](const GridPoint& a, const GridPoint& b) {
                return a.lambda != b.lambda ? a.lambda < b.lambda : a.mu < b.mu;
              });
    report.grid_sizes.emplace_back(family_name(family), points.size());
    for (const auto& point : points) tasks.push_back({family, point});
  }

  std::vector<PointOutcome> outcomes(tasks.size());
  const auto run_task = [&](std::size_t t) {
    try {
      outcomes[t] = evaluate_point(tasks[t]);
    } catch (const std::exception& e) {
      outcomes[t].error = e.what();
    }
  };
  if (mode == SweepMode::Parallel) {
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t t = 0; t < static_cast<std::ptrdiff_t>(tasks.size()); ++t)
      run_task(static_cast<std::size_t>(t));
#else
    for (std::size_t t = 0; t < tasks.size(); ++t) run_task(t);
#endif
  } else {
    for (std::size_t t = 0; t < tasks.size(); ++t) run_task(t);
  }
  for (const auto& outcome : outcomes)
    if (!outcome.error.empty()) throw Error(outcome.error);

  // Aggregate per (family, claim); the grid sweep must be point-independent,
  // so identical computed strings are required for a "matches" verdict.
  std::size_t offset = 0;
  for (Family family : families) {
    std::size_t count = 0;
    for (const auto& task : tasks)
      if (task.family == family) ++count;
    if (count == 0) continue;

    const std::size_t claim_count = outcomes[offset].expectations.size();
    for (std::size_t claim = 0; claim < claim_count; ++claim) {
      VerifyRow row;
      row.family = family_name(family);
      row.source = outcomes[offset].expectations[claim].source;
      row.expected = outcomes[offset].expectations[claim].expected;
      bool uniform = true;
      bool all_match = true;
      for (std::size_t t = offset; t < offset + count; ++t) {
        const auto& e = outcomes[t].expectations[claim];
        uniform = uniform && e.computed == outcomes[offset].expectations[claim].computed;
        all_match = all_match && e.matches;
      }
      if (uniform) {
        row.computed = outcomes[offset].expectations[claim].computed + " [" +
                       std::to_string(count) + "/" + std::to_string(count) +
                       " grid points]";
        row.matches = all_match;
      } else {
        row.computed = "varies across grid points";
        row.matches = false;
      }
      report.rows.push_back(std::move(row));
    }

    bool ratio = true;
    bool kernels = true;
    for (std::size_t t = offset; t < offset + count; ++t) {
      ratio = ratio && outcomes[t].adjoint_is_twice_published;
      kernels = kernels && outcomes[t].kernels_identical;
    }
    std::string note = std::string(family_name(family)) +
                       ": delta(d X-flat) scalar comparison: ";
    note += ratio ? "adjoint path = 2 x published expansion at every grid point"
                  : "no fixed scalar relation between the paths";
    note += kernels ? "; kernels identical" : "; kernels differ";
    report.notes.push_back(std::move(note));

    if (family == Family::Center2) {
      bool anomaly = true;
      for (std::size_t t = offset; t < offset + count; ++t)
        anomaly = anomaly && outcomes[t].anomaly_resolved;
      report.notes.push_back(
          anomaly
              ? std::string(
                    "center2: published connection table misprint resolved: "
                    "the (i=4, j=1) entry is Gamma^2_41 = -lambda/2; "
                    "Gamma^1_41 = 0 at every grid point")
              : std::string(
                    "center2: computed connection does not match the "
                    "resolved (i=4, j=1) table entry"));
    }
    offset += count;
  }
  return report;
}

}  // namespace nilfields
