#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "nilfields/catalog.hpp"

namespace nilfields {

/// Grid evaluations are pure and independent; Parallel fans them out with
/// OpenMP and merges in deterministic (family, lambda, mu) order, so both
/// modes produce identical reports byte for byte.
enum class SweepMode { Serial, Parallel };

struct VerifyRow {
  std::string family;
  std::string source;  // citation, e.g. "Theorem 3"
  std::string expected;
  std::string computed;
  bool matches = false;

  bool operator==(const VerifyRow&) const = default;
};

struct VerifyReport {
  std::vector<std::pair<std::string, std::size_t>> grid_sizes;
  std::vector<VerifyRow> rows;
  std::vector<std::string> notes;

  bool any_differs() const;

  bool operator==(const VerifyReport&) const = default;
};

/// Runs the three parameterized families over the grid and compares the
/// computed spaces against the ledger of published claims (Theorems 1-5).
VerifyReport verify_paper(const std::vector<GridPoint>& grid, SweepMode mode);

}  // namespace nilfields
