#include "exact/poly_io.hpp"

#include <cctype>
#include <map>

#include <json.hpp>

namespace galoisdr {

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view s) : s_(s) {}

  QPoly parse() {
    std::map<int, Rational> terms;
    skip();
    if (at_end()) error("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        error("expected '+' or '-'");
      }
      auto [coef, deg] = term();
      terms[deg] += sign * coef;
      first = false;
      skip();
    }
    int top = terms.empty() ? -1 : terms.rbegin()->first;
    std::vector<Rational> c(static_cast<std::size_t>(top + 1));
    for (const auto& [d, v] : terms) c[static_cast<std::size_t>(d)] = v;
    return QPoly(std::move(c));
  }

 private:
  std::pair<Rational, int> term() {
    Rational coef(1);
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = number();
      have_coef = true;
      skip();
      if (peek() == '*') {
        ++pos_;
        skip();
        if (peek() != 'x') error("expected 'x' after '*'");
      }
    }
    if (peek() == 'x') {
      ++pos_;
      skip();
      int deg = 1;
      if (peek() == '^') {
        ++pos_;
        skip();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) error("expected exponent");
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        std::string digits(s_.substr(start, pos_ - start));
        if (digits.size() > 4) error("exponent too large");
        deg = std::stoi(digits);
      }
      return {coef, deg};
    }
    if (!have_coef) error("expected a coefficient or 'x'");
    return {coef, 0};
  }

  Rational number() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    std::string text(s_.substr(start, pos_ - start));
    skip();
    if (peek() == '/') {
      ++pos_;
      skip();
      std::size_t ds = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (ds == pos_) error("expected denominator");
      text += "/" + std::string(s_.substr(ds, pos_ - ds));
    }
    return parse_rational(text);
  }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::ParseError,
         "cannot parse polynomial '" + std::string(s_) + "' at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

QPoly parse_polynomial(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '{') {
    auto j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
      fail(ErrorCode::ParseError, "polynomial JSON must look like {\"coeffs\": [\"-2\", \"0\", \"1\"]}");
    }
    std::vector<Rational> c;
    for (const auto& e : j["coeffs"]) {
      if (e.is_string()) {
        c.push_back(parse_rational(e.get<std::string>()));
      } else if (e.is_number_integer()) {
        c.emplace_back(e.get<long>());
      } else {
        fail(ErrorCode::ParseError, "polynomial JSON coefficients must be decimal strings");
      }
    }
    return QPoly(std::move(c));
  }
  return TermParser(text).parse();
}

std::string format_polynomial(const QPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    const Rational& c = f[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    Rational a = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    bool unit = a == 1;
    if (i == 0 || !unit) {
      out += to_string(a);
      if (i > 0) out += "*";
    }
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace galoisdr
