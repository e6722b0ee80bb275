#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nefdual/linalg.hpp"
#include "nefdual/point.hpp"

namespace nefdual {

// <x, normal> >= -offset for every x in the polytope, with equality exactly
// on the vertices listed in `incidence`. The normal lives in the dual space
// and is primitive integral.
struct Facet {
  Point normal;
  Rational offset;
  std::vector<std::size_t> incidence;

  bool operator==(const Facet&) const = default;
};

// <x, normal> = value on the affine span.
struct Equation {
  Point normal;
  Rational value;

  bool operator==(const Equation&) const = default;
};

// Bounded convex polytope in exact rational coordinates.
//
// Only hull() and from_inequalities() construct polytopes, so every
// instance is in canonical form: the vertex list is irredundant and sorted
// lexicographically, facets are primitive, irredundant and sorted by
// (normal, offset). Lower-dimensional polytopes carry their affine span as
// equations; their facets are valid within that span only.
class Polytope {
 public:
  Space space() const { return space_; }
  std::size_t ambient_dim() const { return ambient_dim_; }
  // Affine dimension (0 for a point).
  std::size_t dim() const { return ambient_dim_ - affine_span_.size(); }
  bool is_full_dimensional() const { return affine_span_.empty(); }

  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const std::vector<Equation>& affine_span() const { return affine_span_; }

  // Index of v in vertices(), if it is a vertex.
  std::optional<std::size_t> vertex_index(const Point& v) const;

  // Equality of canonical vertex lists.
  friend bool operator==(const Polytope& a, const Polytope& b) {
    return a.space_ == b.space_ && a.ambient_dim_ == b.ambient_dim_ && a.vertices_ == b.vertices_;
  }
  friend bool operator!=(const Polytope& a, const Polytope& b) { return !(a == b); }

 private:
  friend Polytope hull(const std::vector<Point>& points);

  Space space_ = Space::M;
  std::size_t ambient_dim_ = 0;
  std::vector<Point> vertices_;
  std::vector<Equation> affine_span_;
  std::vector<Facet> facets_;
};

// Convex hull with irredundant canonical V- and H-representation. Throws
// std::invalid_argument for an empty input and DimensionMismatch when the
// points disagree in dimension or space.
Polytope hull(const std::vector<Point>& points);

struct Inequality {
  Point normal;
  Rational offset;  // <x, normal> >= -offset
};

// The polytope {x : <x, n> >= -b for every inequality, <x, a> = c for every
// equation}; normals live in dual(space). Returns nullopt when the system
// is infeasible and throws Unbounded when the solution set is unbounded.
std::optional<Polytope> from_inequalities(Space space, std::size_t dim,
                                          const std::vector<Inequality>& inequalities,
                                          const std::vector<Equation>& equations = {});

std::optional<Polytope> intersect(const Polytope& p, const Polytope& q);

// True iff 0 is strictly interior (requires full dimension).
bool has_interior_origin(const Polytope& p);

// {y : <x, y> >= -1 for all x in P}. Throws NotFullDimensional or
// ZeroNotInterior.
Polytope polar_dual(const Polytope& p);

bool is_lattice(const Polytope& p);

struct ReflexivityCheck {
  bool reflexive = false;
  std::string reason;                   // empty when reflexive
  std::optional<Point> bad_vertex;      // a non-lattice vertex
  std::optional<std::size_t> bad_facet; // index of a facet with offset != 1
};

ReflexivityCheck check_reflexive(const Polytope& p);
bool is_reflexive(const Polytope& p);

Polytope minkowski_sum(const Polytope& p, const Polytope& q);

bool contains(const Polytope& p, const Point& x);

// All integer points of p, lexicographically ordered.
std::vector<Point> lattice_points(const Polytope& p);

// "<x,(1,0)> >= -2"
std::string describe(const Facet& f);

}  // namespace nefdual
