#include "nilfields/matrix.hpp"

#include <utility>

#include "nilfields/errors.hpp"

namespace nilfields {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows,
                                         std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch(cols, rows[r].size());
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

RationalVector RationalMatrix::row(std::size_t r) const {
  RationalVector out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out[c] = at(r, c);
  return out;
}

void RationalMatrix::append_row(const RationalVector& v) {
  if (v.size() != cols_) throw DimensionMismatch(cols_, v.size());
  entries_.insert(entries_.end(), v.begin(), v.end());
  ++rows_;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (cols_ != other.rows_) throw DimensionMismatch(cols_, other.rows_);
  RationalMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(r, k) == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c)
        out.at(r, c) += at(r, k) * other.at(k, c);
    }
  return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw DimensionMismatch(rows_ * cols_, other.rows_ * other.cols_);
  RationalMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] = entries_[i] + other.entries_[i];
  return out;
}

RationalMatrix RationalMatrix::scaled(const Rational& c) const {
  RationalMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] = c * entries_[i];
  return out;
}

RationalVector RationalMatrix::apply(const RationalVector& v) const {
  if (v.size() != cols_) throw DimensionMismatch(cols_, v.size());
  RationalVector out(rows_, Rational(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (at(r, c) != 0) out[r] += at(r, c) * v[c];
  return out;
}

bool RationalMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (e != 0) return false;
  return true;
}

bool RationalMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if (at(r, c) != at(c, r)) return false;
  return true;
}

RrefResult rref(const RationalMatrix& m) {
  RationalMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < a.cols() && next_row < a.rows(); ++col) {
    std::size_t pivot_row = next_row;
    while (pivot_row < a.rows() && a.at(pivot_row, col) == 0) ++pivot_row;
    if (pivot_row == a.rows()) continue;
    if (pivot_row != next_row) {
      for (std::size_t c = 0; c < a.cols(); ++c)
        std::swap(a.at(pivot_row, c), a.at(next_row, c));
    }
    const Rational inv = Rational(1) / a.at(next_row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a.at(next_row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == next_row || a.at(r, col) == 0) continue;
      const Rational factor = a.at(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        a.at(r, c) -= factor * a.at(next_row, c);
    }
    pivots.push_back(col);
    ++next_row;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const RationalMatrix& m) {
  return rref(m).pivot_columns.size();
}

SolutionSpace SolutionSpace::full(std::size_t ambient) {
  SolutionSpace s(ambient);
  for (std::size_t i = 0; i < ambient; ++i)
    s.basis_.push_back(unit_vector(ambient, i));
  return s;
}

SolutionSpace SolutionSpace::from_generators(
    std::size_t ambient, const std::vector<RationalVector>& gens) {
  auto reduced = rref(RationalMatrix::from_rows(gens, ambient));
  SolutionSpace s(ambient);
  for (std::size_t r = 0; r < reduced.pivot_columns.size(); ++r)
    s.basis_.push_back(reduced.matrix.row(r));
  return s;
}

bool SolutionSpace::contains(const RationalVector& v) const {
  if (v.size() != ambient_) throw DimensionMismatch(ambient_, v.size());
  // The basis is in RREF, so reducing against each pivot suffices.
  RationalVector rem = v;
  for (const auto& b : basis_) {
    std::size_t pivot = 0;
    while (pivot < ambient_ && b[pivot] == 0) ++pivot;
    if (pivot == ambient_) continue;
    if (rem[pivot] != 0) {
      const Rational factor = rem[pivot];
      for (std::size_t c = 0; c < ambient_; ++c) rem[c] -= factor * b[c];
    }
  }
  return is_zero_vector(rem);
}

bool SolutionSpace::contains(const SolutionSpace& other) const {
  for (const auto& b : other.basis_)
    if (!contains(b)) return false;
  return true;
}

SolutionSpace nullspace(const RationalMatrix& m) {
  const auto reduced = rref(m);
  const auto& pivots = reduced.pivot_columns;
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<RationalVector> gens;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    RationalVector v(m.cols(), Rational(0));
    v[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -reduced.matrix.at(r, free_col);
    gens.push_back(std::move(v));
  }
  return SolutionSpace::from_generators(m.cols(), gens);
}

Feasibility solve_affine(const RationalMatrix& m, const RationalVector& b) {
  if (b.size() != m.rows()) throw DimensionMismatch(m.rows(), b.size());
  RationalMatrix augmented(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) augmented.at(r, c) = m.at(r, c);
    augmented.at(r, m.cols()) = b[r];
  }
  const auto reduced = rref(augmented);
  for (std::size_t r = 0; r < reduced.pivot_columns.size(); ++r) {
    if (reduced.pivot_columns[r] == m.cols()) {
      return Infeasible{r};
    }
  }
  RationalVector particular(m.cols(), Rational(0));
  for (std::size_t r = 0; r < reduced.pivot_columns.size(); ++r)
    particular[reduced.pivot_columns[r]] = reduced.matrix.at(r, m.cols());
  return AffineSolution{std::move(particular), nullspace(m)};
}

}  // namespace nilfields
