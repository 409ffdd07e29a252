#pragma once

#include <cstddef>
#include <vector>

#include "nilfields/errors.hpp"
#include "nilfields/rational.hpp"

namespace nilfields {

/// Cubic rank-3 tensor of rationals, indexed (i, j, k), 0-based.
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(std::size_t dim)
      : dim_(dim), entries_(dim * dim * dim, Rational(0)) {}

  std::size_t dim() const { return dim_; }

  Rational& at(std::size_t i, std::size_t j, std::size_t k) {
    check(i, j, k);
    return entries_[(i * dim_ + j) * dim_ + k];
  }
  const Rational& at(std::size_t i, std::size_t j, std::size_t k) const {
    check(i, j, k);
    return entries_[(i * dim_ + j) * dim_ + k];
  }

  bool operator==(const Tensor3& other) const = default;

 private:
  void check(std::size_t i, std::size_t j, std::size_t k) const {
    if (i >= dim_) throw IndexOutOfRange(i, dim_);
    if (j >= dim_) throw IndexOutOfRange(j, dim_);
    if (k >= dim_) throw IndexOutOfRange(k, dim_);
  }

  std::size_t dim_ = 0;
  std::vector<Rational> entries_;
};

}  // namespace nilfields
