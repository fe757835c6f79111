#include "liepath/rational.hpp"

#include <cctype>

#include "liepath/errors.hpp"

namespace liepath {

std::string to_decimal(const Int& value) { return value.str(); }

std::string to_fraction(const Rat& value) { return value.str(); }

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_token(text)) {
      throw DomainError("malformed rational '" + text + "': expected p or p/q");
    }
    return Rat(Int(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den)) {
    throw DomainError("malformed rational '" + text + "': expected p or p/q");
  }
  const Int d(den);
  if (d == 0) {
    throw DomainError("malformed rational '" + text + "': zero denominator");
  }
  return Rat(Int(num), d);
}

Rat pow_exact(const Rat& base, long exponent) {
  if (exponent == 0) return Rat(1);
  if (base == 0 && exponent < 0) {
    throw DomainError("zero base with negative exponent");
  }
  Rat acc(1);
  Rat b = base;
  unsigned long n =
      exponent > 0 ? static_cast<unsigned long>(exponent)
                   : static_cast<unsigned long>(-(exponent + 1)) + 1UL;
  while (n > 0) {
    if (n & 1UL) acc *= b;
    b *= b;
    n >>= 1UL;
  }
  if (exponent < 0) acc = Rat(1) / acc;
  return acc;
}

Int factorial(int n) {
  if (n < 0) throw DomainError("factorial of a negative number");
  Int acc(1);
  for (int k = 2; k <= n; ++k) acc *= k;
  return acc;
}

}  // namespace liepath
