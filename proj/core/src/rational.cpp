#include "poincare/rational.hpp"

#include <algorithm>

#include "poincare/error.hpp"

namespace poincare {

namespace {

bool is_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return c >= '0' && c <= '9';
  });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view("1")
                                                   : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-' ||
      den.front() == '+') {
    throw Error(ErrorKind::InvalidArgument,
                "malformed rational '" + std::string(text) + "'");
  }
  // mpz does not accept a leading '+'.
  auto strip_plus = [](std::string_view s) {
    return std::string(s.front() == '+' ? s.substr(1) : s);
  };
  Integer n(strip_plus(num), 10);
  Integer d(strip_plus(den), 10);
  if (d == 0) {
    throw Error(ErrorKind::InvalidArgument,
                "zero denominator in '" + std::string(text) + "'");
  }
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

bool is_integral(const Rational& value) { return value.get_den() == 1; }

Integer common_denominator(const std::vector<Rational>& values) {
  Integer l = 1;
  for (const auto& v : values) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  }
  return l;
}

}  // namespace poincare
