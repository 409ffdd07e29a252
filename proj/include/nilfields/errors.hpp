#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nilfields {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t expected, std::size_t got)
      : Error("dimension mismatch: expected " + std::to_string(expected) +
              ", got " + std::to_string(got)) {}
};

class IndexOutOfRange : public Error {
 public:
  IndexOutOfRange(std::size_t index, std::size_t limit)
      : Error("index " + std::to_string(index) + " out of range [0, " +
              std::to_string(limit) + ")") {}
};

class DegreeOutOfRange : public Error {
 public:
  DegreeOutOfRange(std::size_t degree, std::size_t dim)
      : Error("form degree " + std::to_string(degree) +
              " out of range for dimension " + std::to_string(dim)) {}
};

// The violation errors carry 1-based indices, matching the convention used in
// messages and JSON payloads.
class AntisymmetryViolation : public Error {
 public:
  AntisymmetryViolation(std::size_t i_, std::size_t j_, std::size_t k_)
      : Error("antisymmetry violated at (i=" + std::to_string(i_) +
              ", j=" + std::to_string(j_) + ", k=" + std::to_string(k_) + ")"),
        i(i_),
        j(j_),
        k(k_) {}
  std::size_t i, j, k;
};

class JacobiViolation : public Error {
 public:
  JacobiViolation(std::size_t i_, std::size_t j_, std::size_t k_, std::size_t l_)
      : Error("Jacobi identity violated at (i=" + std::to_string(i_) +
              ", j=" + std::to_string(j_) + ", k=" + std::to_string(k_) +
              ", l=" + std::to_string(l_) + ")"),
        i(i_),
        j(j_),
        k(k_),
        l(l_) {}
  std::size_t i, j, k, l;
};

class NotUnimodular : public Error {
 public:
  NotUnimodular()
      : Error("algebra is not unimodular; the adjoint-based codifferential "
              "is not justified") {}
};

class ParameterOrderViolation : public Error {
 public:
  ParameterOrderViolation(const std::string& lambda, const std::string& mu)
      : Error("parameter order violated: lambda = " + lambda +
              " < mu = " + mu) {}
};

class NonPositiveParameter : public Error {
 public:
  explicit NonPositiveParameter(const std::string& value)
      : Error("parameter must be positive, got " + value) {}
};

class ZeroDimension : public Error {
 public:
  ZeroDimension() : Error("dimension must be at least 1") {}
};

}  // namespace nilfields
