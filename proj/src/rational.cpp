#include "nilfields/rational.hpp"

#include <cctype>

#include "nilfields/errors.hpp"

namespace nilfields {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && rest.front() == '-') {
    negative = true;
    rest.remove_prefix(1);
  }
  std::string_view num = rest;
  std::string_view den = "1";
  if (auto slash = rest.find('/'); slash != std::string_view::npos) {
    num = rest.substr(0, slash);
    den = rest.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("invalid rational literal: \"" + std::string(text) + "\"");
  }
  BigInt p{std::string(num)};
  BigInt q{std::string(den)};
  if (q == 0) {
    throw ParseError("zero denominator in rational literal: \"" +
                     std::string(text) + "\"");
  }
  if (negative) p = -p;
  return Rational(p, q);
}

std::string to_string(const Rational& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) {
    out += "/" + denominator(value).str();
  }
  return out;
}

std::string to_string(const RationalVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

std::string basis_combination(const RationalVector& v, std::string_view symbol) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Rational coeff = v[i];
    if (out.empty()) {
      if (coeff < 0) {
        out += "-";
        coeff = -coeff;
      }
    } else {
      out += coeff < 0 ? " - " : " + ";
      if (coeff < 0) coeff = -coeff;
    }
    if (coeff != 1) {
      out += to_string(coeff) + " ";
    }
    out += std::string(symbol) + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

RationalVector unit_vector(std::size_t dim, std::size_t index) {
  if (index >= dim) throw IndexOutOfRange(index, dim);
  RationalVector v(dim, Rational(0));
  v[index] = 1;
  return v;
}

bool is_zero_vector(const RationalVector& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

RationalVector add(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch(a.size(), b.size());
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RationalVector scale(const Rational& c, const RationalVector& v) {
  RationalVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch(a.size(), b.size());
  Rational out(0);
  for (std::size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
  return out;
}

}  // namespace nilfields
