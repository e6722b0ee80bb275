#include "nefdual/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace nefdual {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

bool is_integer(const Rational& q) { return denominator(q) == 1; }

Integer floor(const Rational& q) {
  Integer num = numerator(q);
  Integer den = denominator(q);
  Integer quot = num / den;
  if (num % den != 0 && num < 0) quot -= 1;
  return quot;
}

Integer ceil(const Rational& q) {
  Integer num = numerator(q);
  Integer den = denominator(q);
  Integer quot = num / den;
  if (num % den != 0 && num > 0) quot += 1;
  return quot;
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) {
    throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  }
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    }
  }
  Integer value(std::string(text.substr(pos)));
  return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  Integer num = parse_integer(text.substr(0, slash), text);
  auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  Integer den = parse_integer(den_text, text);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& q) {
  if (is_integer(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational primitive_scale(const std::vector<Rational>& v) {
  Integer lcm_den = 1;
  for (const auto& x : v) lcm_den = boost::multiprecision::lcm(lcm_den, Integer(denominator(x)));
  Integer g = 0;
  for (const auto& x : v) {
    Integer n = numerator(x) * (lcm_den / denominator(x));
    g = boost::multiprecision::gcd(g, n);
  }
  if (g == 0) return Rational(1);
  return Rational(lcm_den, abs(g));
}

std::vector<Rational> primitive(const std::vector<Rational>& v) {
  Rational c = primitive_scale(v);
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x * c);
  return out;
}

}  // namespace nefdual
