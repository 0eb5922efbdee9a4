#include "exact/rational.hpp"

#include <cctype>

#include "errors.hpp"

namespace galoisdr {

std::string to_string(const Rational& q) { return q.get_str(10); }

namespace {

bool valid_integer_text(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s) {
  std::string text(s);
  if (!text.empty() && text[0] == '+') text.erase(0, 1);
  return Integer(text, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = strip(text);
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
  num = strip(num);
  den = strip(den);
  if (!valid_integer_text(num) || !valid_integer_text(den) || den.front() == '-' || den.front() == '+') {
    fail(ErrorCode::ParseError, "not a rational number: '" + std::string(text) + "'");
  }
  Integer d = parse_integer(den);
  if (sgn(d) == 0) fail(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational q(parse_integer(num), d);
  q.canonicalize();
  return q;
}

Integer lcm_denominator(const Integer& acc, const Rational& q) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), acc.get_mpz_t(), q.get_den_mpz_t());
  return out;
}

}  // namespace galoisdr
