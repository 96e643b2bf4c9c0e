#include "gauge2/rational.hpp"

#include <cctype>

namespace gauge2 {

namespace {

bool parse_integer(const std::string& s, Integer& out)
{
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  out = Integer(s[0] == '+' ? s.substr(1) : s);
  return true;
}

} // namespace

std::optional<Rational> parse_rational(const std::string& text)
{
  const auto slash = text.find('/');
  Integer num, den = 1;
  if (slash == std::string::npos) {
    if (!parse_integer(text, num)) return std::nullopt;
  } else {
    if (!parse_integer(text.substr(0, slash), num)) return std::nullopt;
    if (!parse_integer(text.substr(slash + 1), den)) return std::nullopt;
    if (den == 0) return std::nullopt;
  }
  return Rational(num, den);
}

Rational rational_pow(const Rational& base, unsigned exp)
{
  Rational r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

} // namespace gauge2
