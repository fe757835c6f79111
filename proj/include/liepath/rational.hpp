#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace liepath {

// Exact arithmetic types used throughout. Inner-product coefficients are
// products of Dynkin labels and outgrow 64-bit integers on deep words, so
// arbitrary precision is not optional.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Decimal rendering ("-42").
std::string to_decimal(const Int& value);

/// Fraction rendering ("3", "-5/7"); always in lowest terms.
std::string to_fraction(const Rat& value);

/// Parses "p" or "p/q" with optional sign. Throws DomainError on anything else.
Rat parse_rational(const std::string& text);

/// Exact integer power; negative exponents require a nonzero base.
Rat pow_exact(const Rat& base, long exponent);

/// n! as an exact integer; n must be nonnegative.
Int factorial(int n);

}  // namespace liepath
