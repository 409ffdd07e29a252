#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>
#include <vector>

namespace nilfields {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Stored reduced with positive denominator; zero is
/// 0/1. Arithmetic never rounds.
using Rational = boost::multiprecision::cpp_rational;

using RationalVector = std::vector<Rational>;

/// Parses "p/q" or "p" with an optional leading minus. Throws ParseError on
/// malformed input and on zero denominators.
Rational parse_rational(std::string_view text);

/// Canonical form: "p/q", or "p" alone when the denominator is 1.
std::string to_string(const Rational& value);

/// "(a, b, c)" with canonical rational components.
std::string to_string(const RationalVector& v);

/// Renders a vector as a combination of basis symbols, e.g. "e1 - 1/2 e3".
/// The zero vector renders as "0".
std::string basis_combination(const RationalVector& v,
                              std::string_view symbol = "e");

RationalVector unit_vector(std::size_t dim, std::size_t index);

bool is_zero_vector(const RationalVector& v);

RationalVector add(const RationalVector& a, const RationalVector& b);
RationalVector scale(const Rational& c, const RationalVector& v);
Rational dot(const RationalVector& a, const RationalVector& b);

}  // namespace nilfields
