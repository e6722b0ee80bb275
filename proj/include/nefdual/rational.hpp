#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace nefdual {

// Exact rational scalar. The GMP backend keeps values canonical
// (lowest terms, positive denominator) after every operation.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

bool is_integer(const Rational& q);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
// text or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

// Smallest positive multiple of the vector that is integral and has
// coprime entries. Zero vectors are returned unchanged.
std::vector<Rational> primitive(const std::vector<Rational>& v);

// Positive factor c such that c * v is primitive integral (1 for zero).
Rational primitive_scale(const std::vector<Rational>& v);

}  // namespace nefdual
