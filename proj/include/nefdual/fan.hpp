#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "nefdual/polytope.hpp"

namespace nefdual {

// The face fan of a full-dimensional polytope with 0 in its interior: one
// maximal cone per facet, spanned by that facet's vertices.
class FaceFan {
 public:
  struct Cone {
    std::size_t facet;                 // index into base().facets()
    std::vector<std::size_t> vertices; // vertex indices of that facet
  };

  const Polytope& base() const { return base_; }
  const std::vector<Cone>& cones() const { return cones_; }
  Space space() const { return base_.space(); }
  std::size_t dim() const { return base_.ambient_dim(); }

  // Index of a maximal cone containing x (the first one, in facet order).
  // For x != 0 these are the facets minimizing <x, n>/offset.
  std::size_t locate(const Point& x) const;

 private:
  friend std::shared_ptr<const FaceFan> face_fan(const Polytope& p);
  Polytope base_;
  std::vector<Cone> cones_;
};

// Throws NotFullDimensional or ZeroNotInterior.
std::shared_ptr<const FaceFan> face_fan(const Polytope& p);

// A function linear on each maximal cone of a face fan.
class PLFunction {
 public:
  const FaceFan& fan() const { return *fan_; }
  const std::shared_ptr<const FaceFan>& fan_ptr() const { return fan_; }
  const std::vector<Rational>& vertex_values() const { return values_; }
  // u_sigma per maximal cone, in the dual space of the fan.
  const std::vector<Point>& functionals() const { return functionals_; }
  bool is_convex() const { return !convexity_violation_.has_value(); }
  bool is_integral() const { return !integrality_violation_.has_value(); }

  struct ConvexityViolation {
    std::size_t vertex;
    std::size_t cone;
  };
  // First (vertex, cone) with value(vertex) < <vertex, u_cone>, in vertex-major order.
  const std::optional<ConvexityViolation>& convexity_violation() const {
    return convexity_violation_;
  }
  // First cone with a non-integral functional.
  const std::optional<std::size_t>& integrality_violation() const { return integrality_violation_; }

  friend PLFunction operator+(const PLFunction& f, const PLFunction& g);

 private:
  friend struct PLBuilder;
  std::shared_ptr<const FaceFan> fan_;
  std::vector<Rational> values_;
  std::vector<Point> functionals_;
  std::optional<ConvexityViolation> convexity_violation_;
  std::optional<std::size_t> integrality_violation_;
};

struct NotPiecewiseLinear {
  std::size_t cone;
};

class NotConvex : public GeometryError {
 public:
  NotConvex(std::size_t vertex, std::size_t cone);
  std::size_t vertex;
  std::size_t cone;
};

// Solves <e, u_sigma> = values[e] over the vertices e of each facet.
// Throws std::invalid_argument when the value count does not match.
std::variant<PLFunction, NotPiecewiseLinear> pl_from_vertex_values(
    std::shared_ptr<const FaceFan> fan, std::vector<Rational> values);

// <x, u_sigma> on a cone containing x. For convex functions the result is
// cross-checked against the maximum over all cones.
Rational evaluate(const PLFunction& f, const Point& x);

// {y : <x, y> >= -f(x) for all x}, the hull of the negated functionals.
// Throws NotConvex.
Polytope support_polytope(const PLFunction& f);

}  // namespace nefdual
