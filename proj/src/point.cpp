#include "nefdual/point.hpp"

#include <algorithm>

namespace nefdual {

const char* to_string(Space s) { return s == Space::M ? "M" : "N"; }

bool Point::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rational& x) { return x == 0; });
}

bool Point::is_integral() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rational& x) { return is_integer(x); });
}

bool operator<(const Point& a, const Point& b) {
  if (a.space != b.space) return a.space < b.space;
  return std::lexicographical_compare(a.coords.begin(), a.coords.end(), b.coords.begin(),
                                      b.coords.end());
}

Point origin(Space s, std::size_t dim) { return Point(s, std::vector<Rational>(dim, Rational(0))); }

Point make_point(Space s, std::initializer_list<long> coords) {
  std::vector<Rational> c;
  c.reserve(coords.size());
  for (long x : coords) c.emplace_back(x);
  return Point(s, std::move(c));
}

void require_compatible(const Point& a, const Point& b, const char* what) {
  if (a.space != b.space || a.dim() != b.dim()) {
    throw DimensionMismatch(std::string(what) + ": points " + to_string(a) + " and " +
                            to_string(b) + " are not in the same space");
  }
}

Point operator+(const Point& a, const Point& b) {
  require_compatible(a, b, "addition");
  Point out = a;
  for (std::size_t i = 0; i < out.dim(); ++i) out.coords[i] += b.coords[i];
  return out;
}

Point operator-(const Point& a, const Point& b) {
  require_compatible(a, b, "subtraction");
  Point out = a;
  for (std::size_t i = 0; i < out.dim(); ++i) out.coords[i] -= b.coords[i];
  return out;
}

Point operator-(const Point& a) {
  Point out = a;
  for (auto& x : out.coords) x = -x;
  return out;
}

Point operator*(const Rational& c, const Point& p) {
  Point out = p;
  for (auto& x : out.coords) x *= c;
  return out;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational pairing(const Point& x, const Point& y) {
  if (x.space == y.space || x.dim() != y.dim()) {
    throw DimensionMismatch("pairing needs an M-point and an N-point of equal dimension, got " +
                            std::string(to_string(x.space)) + to_string(x) + " and " +
                            to_string(y.space) + to_string(y));
  }
  return dot(x.coords, y.coords);
}

std::string to_string(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i) s += ",";
    s += to_string(p.coords[i]);
  }
  return s + ")";
}

}  // namespace nefdual
