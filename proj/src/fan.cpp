#include "nefdual/fan.hpp"

#include <stdexcept>

namespace nefdual {

std::shared_ptr<const FaceFan> face_fan(const Polytope& p) {
  if (!p.is_full_dimensional()) throw NotFullDimensional();
  if (!has_interior_origin(p)) throw ZeroNotInterior();
  auto fan = std::make_shared<FaceFan>();
  fan->base_ = p;
  for (std::size_t i = 0; i < p.facets().size(); ++i) {
    fan->cones_.push_back({i, p.facets()[i].incidence});
  }
  return fan;
}

std::size_t FaceFan::locate(const Point& x) const {
  if (x.space != space() || x.dim() != dim()) {
    throw DimensionMismatch("locate: point " + to_string(x) + " is not in the fan's space");
  }
  std::size_t best = 0;
  Rational best_ratio;
  for (std::size_t c = 0; c < cones_.size(); ++c) {
    const auto& f = base_.facets()[cones_[c].facet];
    Rational ratio = pairing(x, f.normal) / f.offset;
    if (c == 0 || ratio < best_ratio) {
      best = c;
      best_ratio = ratio;
    }
  }
  return best;
}

NotConvex::NotConvex(std::size_t v, std::size_t c)
    : GeometryError("NotConvex: value at vertex " + std::to_string(v) +
                    " lies below the linear piece of cone " + std::to_string(c)),
      vertex(v),
      cone(c) {}

struct PLBuilder {
  static PLFunction make(std::shared_ptr<const FaceFan> fan, std::vector<Rational> values,
                         std::vector<Point> functionals) {
    PLFunction f;
    f.fan_ = std::move(fan);
    f.values_ = std::move(values);
    f.functionals_ = std::move(functionals);
    const auto& verts = f.fan_->base().vertices();
    for (std::size_t c = 0; c < f.functionals_.size(); ++c) {
      if (!f.functionals_[c].is_integral()) {
        f.integrality_violation_ = c;
        break;
      }
    }
    for (std::size_t v = 0; v < verts.size() && !f.convexity_violation_; ++v) {
      for (std::size_t c = 0; c < f.functionals_.size(); ++c) {
        if (f.values_[v] < pairing(verts[v], f.functionals_[c])) {
          f.convexity_violation_ = PLFunction::ConvexityViolation{v, c};
          break;
        }
      }
    }
    return f;
  }
};

std::variant<PLFunction, NotPiecewiseLinear> pl_from_vertex_values(
    std::shared_ptr<const FaceFan> fan, std::vector<Rational> values) {
  const auto& verts = fan->base().vertices();
  if (values.size() != verts.size()) {
    throw std::invalid_argument("pl_from_vertex_values: expected " + std::to_string(verts.size()) +
                                " values, got " + std::to_string(values.size()));
  }
  std::vector<Point> functionals;
  functionals.reserve(fan->cones().size());
  for (std::size_t c = 0; c < fan->cones().size(); ++c) {
    std::vector<LinearConstraint> system;
    for (auto v : fan->cones()[c].vertices) system.push_back({verts[v], values[v]});
    auto sol = solve_linear(system);
    if (sol.status == SolveStatus::Inconsistent) return NotPiecewiseLinear{c};
    if (sol.status == SolveStatus::Underdetermined) {
      // Facet vertices of a polytope with interior origin always span.
      throw InvariantViolation("pl_from_vertex_values: cone " + std::to_string(c) +
                               " is not full-dimensional");
    }
    functionals.push_back(std::move(*sol.solution));
  }
  return PLBuilder::make(std::move(fan), std::move(values), std::move(functionals));
}

PLFunction operator+(const PLFunction& f, const PLFunction& g) {
  if (f.fan_ != g.fan_ && f.fan_->base() != g.fan_->base()) {
    throw std::invalid_argument("PLFunction sum: functions live on different fans");
  }
  std::vector<Rational> values = f.values_;
  for (std::size_t i = 0; i < values.size(); ++i) values[i] += g.values_[i];
  std::vector<Point> functionals;
  for (std::size_t c = 0; c < f.functionals_.size(); ++c) {
    functionals.push_back(f.functionals_[c] + g.functionals_[c]);
  }
  return PLBuilder::make(f.fan_, std::move(values), std::move(functionals));
}

Rational evaluate(const PLFunction& f, const Point& x) {
  std::size_t c = f.fan().locate(x);
  Rational value = pairing(x, f.functionals()[c]);
  if (f.is_convex()) {
    Rational mx = value;
    for (const auto& u : f.functionals()) mx = std::max(mx, pairing(x, u));
    if (mx != value) {
      throw InvariantViolation("evaluate: convex function at " + to_string(x) + " gives " +
                               to_string(value) + " on its cone but max " + to_string(mx));
    }
  }
  return value;
}

Polytope support_polytope(const PLFunction& f) {
  if (auto bad = f.convexity_violation()) throw NotConvex(bad->vertex, bad->cone);
  const auto& verts = f.fan().base().vertices();
  std::vector<Point> generators;
  generators.reserve(f.functionals().size());
  for (const auto& u : f.functionals()) {
    Point g = -u;
    for (std::size_t v = 0; v < verts.size(); ++v) {
      if (pairing(verts[v], g) < -f.vertex_values()[v]) {
        throw InvariantViolation("support_polytope: generator " + to_string(g) +
                                 " violates <e,y> >= -f(e) at vertex " + to_string(verts[v]));
      }
    }
    generators.push_back(std::move(g));
  }
  return hull(generators);
}

}  // namespace nefdual
