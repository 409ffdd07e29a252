#include "nilfields/forms.hpp"

#include <algorithm>

#include "nilfields/errors.hpp"

namespace nilfields {

namespace {

void enumerate_tuples(std::size_t dim, std::size_t degree,
                      std::vector<std::size_t>& current,
                      std::vector<std::vector<std::size_t>>& out) {
  if (current.size() == degree) {
    out.push_back(current);
    return;
  }
  const std::size_t start = current.empty() ? 0 : current.back() + 1;
  for (std::size_t next = start; next < dim; ++next) {
    current.push_back(next);
    enumerate_tuples(dim, degree, current, out);
    current.pop_back();
  }
}

}  // namespace

FormBasis::FormBasis(std::size_t dim, std::size_t degree)
    : dim_(dim), degree_(degree) {
  std::vector<std::size_t> current;
  enumerate_tuples(dim, degree, current, tuples_);
}

std::size_t FormBasis::index_of(const std::vector<std::size_t>& tuple) const {
  const auto it = std::lower_bound(tuples_.begin(), tuples_.end(), tuple);
  if (it == tuples_.end() || *it != tuple)
    throw IndexOutOfRange(tuples_.size(), tuples_.size());
  return static_cast<std::size_t>(it - tuples_.begin());
}

std::string FormBasis::label(std::size_t index) const {
  if (index >= tuples_.size()) throw IndexOutOfRange(index, tuples_.size());
  if (degree_ == 0) return "1";
  std::string out;
  for (std::size_t m = 0; m < tuples_[index].size(); ++m) {
    if (m) out += "^";
    out += "e" + std::to_string(tuples_[index][m] + 1);
  }
  return out;
}

InvariantForm flat(const RationalVector& x) { return InvariantForm{1, x}; }

RationalMatrix d_matrix(const MetricLieAlgebra& alg, std::size_t p) {
  const std::size_t n = alg.dim();
  if (p > n) throw DegreeOutOfRange(p, n);
  const FormBasis domain(n, p);
  const FormBasis target(n, p + 1);
  RationalMatrix d(target.size(), domain.size());
  if (p == 0) return d;  // invariant functions are constants

  const auto& c = alg.constants();
  // Chevalley-Eilenberg: (dw)(x_0..x_p) =
  //   sum_{r<s} (-1)^{r+s} w([x_r, x_s], x_0.. x^_r .. x^_s ..x_p).
  for (std::size_t row = 0; row < target.size(); ++row) {
    const auto& tuple = target.multi_indices()[row];
    for (std::size_t r = 0; r + 1 < tuple.size(); ++r) {
      for (std::size_t s = r + 1; s < tuple.size(); ++s) {
        std::vector<std::size_t> rest;
        rest.reserve(tuple.size() - 2);
        for (std::size_t m = 0; m < tuple.size(); ++m)
          if (m != r && m != s) rest.push_back(tuple[m]);
        const bool pair_negative = ((r + s) % 2) == 1;
        for (std::size_t k = 0; k < n; ++k) {
          const Rational& coeff = c.at(tuple[r], tuple[s], k);
          if (coeff == 0) continue;
          // Evaluate e^I on (e_k, rest): zero on a repeated index, otherwise
          // the sign of sorting k into the (already increasing) rest.
          if (std::find(rest.begin(), rest.end(), k) != rest.end()) continue;
          std::vector<std::size_t> sorted = rest;
          const auto pos = static_cast<std::size_t>(
              std::lower_bound(sorted.begin(), sorted.end(), k) -
              sorted.begin());
          sorted.insert(sorted.begin() + static_cast<std::ptrdiff_t>(pos), k);
          Rational term = coeff;
          if (pair_negative) term = -term;
          if (pos % 2 == 1) term = -term;
          d.at(row, domain.index_of(sorted)) += term;
        }
      }
    }
  }
  return d;
}

RationalMatrix codifferential_matrix(const MetricLieAlgebra& alg,
                                     std::size_t p) {
  if (!alg.is_unimodular()) throw NotUnimodular();
  if (p == 0 || p > alg.dim()) throw DegreeOutOfRange(p, alg.dim());
  return d_matrix(alg, p - 1).transposed();
}

RationalMatrix laplacian_matrix(const MetricLieAlgebra& alg, std::size_t p) {
  if (!alg.is_unimodular()) throw NotUnimodular();
  const std::size_t n = alg.dim();
  if (p > n) throw DegreeOutOfRange(p, n);
  const RationalMatrix up = d_matrix(alg, p);
  RationalMatrix laplacian = up.transposed() * up;
  if (p >= 1) {
    const RationalMatrix down = d_matrix(alg, p - 1);
    laplacian = laplacian + down * down.transposed();
  }
  return laplacian;
}

}  // namespace nilfields
