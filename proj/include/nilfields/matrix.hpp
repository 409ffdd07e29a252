#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "nilfields/rational.hpp"

namespace nilfields {

/// Dense row-major matrix of exact rationals. Zero rows or columns are legal
/// (empty form bases produce genuinely 0-by-k maps).
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows,
                                  std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  RationalVector row(std::size_t r) const;
  void append_row(const RationalVector& v);

  RationalMatrix transposed() const;
  RationalMatrix operator*(const RationalMatrix& other) const;
  RationalMatrix operator+(const RationalMatrix& other) const;
  RationalMatrix scaled(const Rational& c) const;
  RationalVector apply(const RationalVector& v) const;

  bool is_zero() const;
  bool is_symmetric() const;

  bool operator==(const RationalMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

struct RrefResult {
  RationalMatrix matrix;
  std::vector<std::size_t> pivot_columns;
};

/// Unique reduced row-echelon form. Pivot choice is deterministic: leftmost
/// nonzero column, topmost nonzero row.
RrefResult rref(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// A linear subspace in canonical form: the basis is the reduced row-echelon
/// basis of the row span, so equal subspaces compare entrywise equal.
class SolutionSpace {
 public:
  SolutionSpace() = default;
  explicit SolutionSpace(std::size_t ambient) : ambient_(ambient) {}

  static SolutionSpace full(std::size_t ambient);
  static SolutionSpace from_generators(std::size_t ambient,
                                       const std::vector<RationalVector>& gens);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<RationalVector>& basis() const { return basis_; }

  bool contains(const RationalVector& v) const;
  bool contains(const SolutionSpace& other) const;

  bool operator==(const SolutionSpace& other) const = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<RationalVector> basis_;
};

/// Kernel of m as a canonical SolutionSpace; dimension = cols - rank.
SolutionSpace nullspace(const RationalMatrix& m);

struct AffineSolution {
  RationalVector particular;
  SolutionSpace homogeneous;
};

struct Infeasible {
  // 0-based row of the reduced augmented matrix whose pivot falls in the
  // right-hand-side column (the row where the rank increases).
  std::size_t witness_row = 0;

  bool operator==(const Infeasible&) const = default;
};

using Feasibility = std::variant<AffineSolution, Infeasible>;

/// Full affine solution set of m x = b, or an infeasibility witness.
Feasibility solve_affine(const RationalMatrix& m, const RationalVector& b);

}  // namespace nilfields
