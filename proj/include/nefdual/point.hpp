#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "nefdual/rational.hpp"

namespace nefdual {

// Which of the two dual lattices (tensored with R) a point lives in.
enum class Space { M, N };

constexpr Space dual(Space s) { return s == Space::M ? Space::N : Space::M; }

const char* to_string(Space s);

struct Point {
  Space space = Space::M;
  std::vector<Rational> coords;

  Point() = default;
  Point(Space s, std::vector<Rational> c) : space(s), coords(std::move(c)) {}

  std::size_t dim() const { return coords.size(); }
  const Rational& operator[](std::size_t i) const { return coords[i]; }
  Rational& operator[](std::size_t i) { return coords[i]; }

  bool is_zero() const;
  bool is_integral() const;

  friend bool operator==(const Point& a, const Point& b) {
    return a.space == b.space && a.coords == b.coords;
  }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  // Lexicographic on coordinates; points of different spaces order M first.
  friend bool operator<(const Point& a, const Point& b);
};

Point origin(Space s, std::size_t dim);
Point make_point(Space s, std::initializer_list<long> coords);

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator-(const Point& a);
Point operator*(const Rational& c, const Point& p);

// The canonical pairing <x, y>; x and y must live in dual spaces.
Rational pairing(const Point& x, const Point& y);

// Coordinate dot product, ignoring the space tags. Internal helper for
// code that treats a point as a plain coordinate vector.
Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b);

// "(1,-1/2,0)"
std::string to_string(const Point& p);

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class ZeroNotInterior : public GeometryError {
 public:
  ZeroNotInterior() : GeometryError("ZeroNotInterior: origin is not an interior point") {}
};

class NotFullDimensional : public GeometryError {
 public:
  NotFullDimensional() : GeometryError("NotFullDimensional: polytope is not full-dimensional") {}
};

class Unbounded : public GeometryError {
 public:
  Unbounded() : GeometryError("Unbounded: inequality system does not describe a polytope") {}
};

// A proved identity failed to hold. This is always a library defect and
// carries the exact witness in its message.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Throws DimensionMismatch unless both points share space and dimension.
void require_compatible(const Point& a, const Point& b, const char* what);

}  // namespace nefdual
