#include "qreider/rational.hpp"

#include "qreider/errors.hpp"

#include <cctype>
#include <iomanip>
#include <sstream>

namespace qreider {

Integer floor_of(const Rational& q) {
  const Integer n = numerator_of(q);
  const Integer d = denominator_of(q);
  Integer t = n / d;  // truncates toward zero
  if (n < 0 && t * d != n) t -= 1;
  return t;
}

Integer ceil_of(const Rational& q) { return -floor_of(-q); }

Rational frac_of(const Rational& q) { return q - Rational(floor_of(q)); }

bool is_integer(const Rational& q) { return denominator_of(q) == 1; }

Integer isqrt_floor(const Rational& x) {
  if (x < 0) throw DomainError("isqrt_floor of a negative rational");
  // floor(sqrt(x)) == floor(sqrt(floor(x)))
  return boost::multiprecision::sqrt(floor_of(x));
}

Rational dyadic(unsigned k) {
  Integer den = 1;
  den <<= k;
  return Rational(Integer(1), den);
}

std::string to_string(const Rational& q) { return q.str(); }

std::string to_decimal(const Rational& q, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << q.convert_to<double>();
  return os.str();
}

Rational parse_rational(std::string_view text) {
  auto digits_ok = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!digits_ok(num) || !digits_ok(den))
    throw DomainError("malformed rational literal '" + std::string(text) + "'");
  const Integer d{std::string(den)};
  if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  const Rational r(Integer{std::string(num)}, d);
  return negative ? Rational(-r) : r;
}

}  // namespace qreider
