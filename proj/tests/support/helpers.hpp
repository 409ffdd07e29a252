#pragma once

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "nilfields/algebra.hpp"
#include "nilfields/catalog.hpp"
#include "nilfields/connection.hpp"
#include "nilfields/matrix.hpp"
#include "nilfields/rational.hpp"

namespace testsupport {

using nilfields::MetricLieAlgebra;
using nilfields::Rational;
using nilfields::RationalMatrix;
using nilfields::RationalVector;
using nilfields::StructureConstants;

// ---------------------------------------------------------------------------
// Frozen connection tables for the three families (1-based indices). These
// are test fixtures, not inputs: the library computes the connection from the
// Koszul formula and must reproduce them entrywise. The (k=2,i=4,j=1) entry
// of the second family is the resolved form of a superscript misprint in the
// published table.

struct GammaEntry {
  std::size_t k, i, j;
  Rational value;
};

inline std::vector<GammaEntry> center1_gamma(const Rational& l,
                                             const Rational& m) {
  const Rational lh = l / 2;
  const Rational mh = m / 2;
  return {
      {5, 1, 2, lh},  {5, 2, 1, -lh}, {2, 1, 5, -lh}, {2, 5, 1, -lh},
      {1, 2, 5, lh},  {1, 5, 2, lh},  {5, 3, 4, mh},  {5, 4, 3, -mh},
      {4, 3, 5, -mh}, {4, 5, 3, -mh}, {3, 4, 5, mh},  {3, 5, 4, mh},
  };
}

inline std::vector<GammaEntry> center2_gamma(const Rational& l,
                                             const Rational& m) {
  const Rational lh = l / 2;
  const Rational mh = m / 2;
  return {
      {4, 1, 2, lh},  {4, 2, 1, -lh}, {5, 1, 3, mh},  {5, 3, 1, -mh},
      {2, 1, 4, -lh}, {2, 4, 1, -lh}, {3, 1, 5, -mh}, {3, 5, 1, -mh},
      {1, 2, 4, lh},  {1, 4, 2, lh},  {1, 3, 5, mh},  {1, 5, 3, mh},
  };
}

inline std::vector<GammaEntry> center3_gamma(const Rational& l) {
  const Rational lh = l / 2;
  return {
      {3, 1, 2, lh}, {3, 2, 1, -lh}, {2, 1, 3, -lh},
      {2, 3, 1, -lh}, {1, 2, 3, lh}, {1, 3, 2, lh},
  };
}

/// Entrywise comparison of a computed tensor against a fixture list; entries
/// absent from the list must be zero.
inline bool gamma_matches_table(const nilfields::ChristoffelTensor& g,
                                const std::vector<GammaEntry>& table) {
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Rational expected(0);
        for (const auto& e : table)
          if (e.i == i + 1 && e.j == j + 1 && e.k == k + 1) expected = e.value;
        if (g.at(i, j, k) != expected) return false;
      }
  return true;
}

// ---------------------------------------------------------------------------
// Auxiliary algebras.

/// [e1, e2] = e2 in dimension 2: solvable, not nilpotent, not unimodular.
inline MetricLieAlgebra solvable2() {
  StructureConstants c(2);
  c.set_bracket(0, 1, 1, Rational(1));
  return MetricLieAlgebra(std::move(c));
}

// ---------------------------------------------------------------------------
// Randomized inputs (fixed seeds at the call sites keep runs reproducible).

inline Rational random_small_rational(std::mt19937& rng, int max_num = 3,
                                      int max_den = 3) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline RationalVector random_vector(std::mt19937& rng, std::size_t n) {
  RationalVector v(n);
  for (auto& x : v) x = random_small_rational(rng);
  return v;
}

inline RationalMatrix random_matrix(std::mt19937& rng, std::size_t rows,
                                    std::size_t cols) {
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m.at(r, c) = random_small_rational(rng);
  return m;
}

/// Random valid nilpotent algebra of dim <= 5: brackets of the leading block
/// land in trailing coordinates that bracket to zero, so every double
/// bracket vanishes and Jacobi holds by construction. Produces abelian,
/// Heisenberg-like and wider 2-step algebras.
inline MetricLieAlgebra random_two_step_algebra(std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> dim_dist(2, 5);
  const std::size_t n = dim_dist(rng);
  std::uniform_int_distribution<std::size_t> target_dist(1, n - 1);
  const std::size_t targets = target_dist(rng);
  const std::size_t gens = n - targets;
  StructureConstants c(n);
  std::bernoulli_distribution fill(0.6);
  for (std::size_t i = 0; i < gens; ++i)
    for (std::size_t j = i + 1; j < gens; ++j)
      for (std::size_t k = gens; k < n; ++k)
        if (fill(rng)) c.set_bracket(i, j, k, random_small_rational(rng));
  return MetricLieAlgebra(std::move(c));
}

// ---------------------------------------------------------------------------
// Independent oracles.

/// Rank by plain forward elimination without normalization; a second path
/// that shares no code with rref().
inline std::size_t forward_elimination_rank(RationalMatrix a) {
  std::size_t rank = 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t pr = r;
    while (pr < a.rows() && a.at(pr, c) == 0) ++pr;
    if (pr == a.rows()) continue;
    if (pr != r)
      for (std::size_t cc = 0; cc < a.cols(); ++cc)
        std::swap(a.at(pr, cc), a.at(r, cc));
    for (std::size_t rr = r + 1; rr < a.rows(); ++rr) {
      if (a.at(rr, c) == 0) continue;
      const Rational f = a.at(rr, c) / a.at(r, c);
      for (std::size_t cc = c; cc < a.cols(); ++cc)
        a.at(rr, cc) -= f * a.at(r, cc);
    }
    ++r;
    ++rank;
  }
  return rank;
}

/// Kernel by exhaustive enumeration of small integer vectors; only usable for
/// very small matrices.
inline nilfields::SolutionSpace enumerated_kernel(const RationalMatrix& m,
                                                  int bound) {
  std::vector<RationalVector> members;
  RationalVector v(m.cols(), Rational(0));
  std::vector<int> digits(m.cols(), -bound);
  while (true) {
    for (std::size_t i = 0; i < m.cols(); ++i) v[i] = digits[i];
    if (nilfields::is_zero_vector(m.apply(v)) && !nilfields::is_zero_vector(v))
      members.push_back(v);
    std::size_t pos = 0;
    while (pos < digits.size() && digits[pos] == bound) digits[pos++] = -bound;
    if (pos == digits.size()) break;
    ++digits[pos];
  }
  return nilfields::SolutionSpace::from_generators(m.cols(), members);
}

/// Direct Jacobi check on raw constants (used to predict the validator's
/// verdict on mutated tensors).
inline bool jacobi_holds(const StructureConstants& c) {
  const std::size_t n = c.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Rational sum(0);
          for (std::size_t m = 0; m < n; ++m) {
            sum += c.at(i, j, m) * c.at(m, k, l);
            sum += c.at(j, k, m) * c.at(m, i, l);
            sum += c.at(k, i, m) * c.at(m, j, l);
          }
          if (sum != 0) return false;
        }
  return true;
}

// ---------------------------------------------------------------------------
// Process helpers for driving the CLI binary.

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

inline CommandResult run_command(const std::string& command) {
  CommandResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

class TempFile {
 public:
  explicit TempFile(const std::string& contents,
                    const std::string& suffix = ".json") {
    static int counter = 0;
    path_ = (std::filesystem::temp_directory_path() /
             ("nilfields_test_" + std::to_string(::getpid()) + "_" +
              std::to_string(counter++) + suffix))
                .string();
    std::ofstream out(path_);
    out << contents;
  }
  ~TempFile() {
    std::error_code ec;
    std::filesystem::remove(path_, ec);
  }
  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace testsupport
