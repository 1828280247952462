#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace qreider {

// Expression templates are disabled so that `auto` always yields a value.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

struct NamedValue {
  std::string name;
  Rational value;

  bool operator==(const NamedValue&) const = default;
};

using NamedValues = std::vector<NamedValue>;

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);
// q - floor(q), always in [0, 1).
Rational frac_of(const Rational& q);
bool is_integer(const Rational& q);

// floor(sqrt(x)) for x >= 0.
Integer isqrt_floor(const Rational& x);

// 2^-k
Rational dyadic(unsigned k);

// Canonical exact rendering: "p" or "p/q", denominator positive.
std::string to_string(const Rational& q);
// Decimal approximation for display only.
std::string to_decimal(const Rational& q, int digits = 6);

// Accepts "[-]p" and "[-]p/q" with decimal digits; throws DomainError otherwise.
Rational parse_rational(std::string_view text);

}  // namespace qreider
