#include <algorithm>
#include <functional>
#include <string>

#include "nefdual/polytope.hpp"

namespace nefdual {

namespace {

std::string describe_space(const Polytope& p) {
  return std::string(p.space() == Space::M ? "M" : "N") + "^" + std::to_string(p.ambient_dim());
}

}  // namespace

std::optional<std::size_t> Polytope::vertex_index(const Point& v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<Polytope> intersect(const Polytope& p, const Polytope& q) {
  if (p.space() != q.space() || p.ambient_dim() != q.ambient_dim()) {
    throw DimensionMismatch(std::string("intersect: ") + describe_space(p) + " vs " + describe_space(q));
  }
  std::vector<Inequality> ineqs;
  std::vector<Equation> eqs;
  for (const auto* poly : {&p, &q}) {
    for (const auto& f : poly->facets()) ineqs.push_back({f.normal, f.offset});
    for (const auto& e : poly->affine_span()) eqs.push_back(e);
  }
  return from_inequalities(p.space(), p.ambient_dim(), ineqs, eqs);
}

bool has_interior_origin(const Polytope& p) {
  if (!p.is_full_dimensional()) return false;
  return std::all_of(p.facets().begin(), p.facets().end(),
                     [](const Facet& f) { return f.offset > 0; });
}

Polytope polar_dual(const Polytope& p) {
  if (!p.is_full_dimensional()) throw NotFullDimensional();
  if (!has_interior_origin(p)) throw ZeroNotInterior();
  std::vector<Point> vertices;
  vertices.reserve(p.facets().size());
  for (const auto& f : p.facets()) vertices.push_back(Rational(1) / f.offset * f.normal);
  return hull(vertices);
}

bool is_lattice(const Polytope& p) {
  return std::all_of(p.vertices().begin(), p.vertices().end(),
                     [](const Point& v) { return v.is_integral(); });
}

ReflexivityCheck check_reflexive(const Polytope& p) {
  ReflexivityCheck out;
  if (!p.is_full_dimensional()) {
    out.reason = "not full-dimensional";
    return out;
  }
  for (const auto& v : p.vertices()) {
    if (!v.is_integral()) {
      out.reason = "vertex " + to_string(v) + " is not a lattice point";
      out.bad_vertex = v;
      return out;
    }
  }
  if (!has_interior_origin(p)) {
    out.reason = "origin is not an interior point";
    return out;
  }
  for (std::size_t i = 0; i < p.facets().size(); ++i) {
    if (p.facets()[i].offset != 1) {
      out.reason = "facet " + describe(p.facets()[i]) + " has lattice distance " +
                   to_string(p.facets()[i].offset);
      out.bad_facet = i;
      return out;
    }
  }
  out.reflexive = true;
  return out;
}

bool is_reflexive(const Polytope& p) { return check_reflexive(p).reflexive; }

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (p.space() != q.space() || p.ambient_dim() != q.ambient_dim()) {
    throw DimensionMismatch(std::string("minkowski_sum: ") + describe_space(p) + " vs " + describe_space(q));
  }
  std::vector<Point> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices()) {
    for (const auto& b : q.vertices()) sums.push_back(a + b);
  }
  return hull(sums);
}

bool contains(const Polytope& p, const Point& x) {
  if (x.space != p.space() || x.dim() != p.ambient_dim()) {
    throw DimensionMismatch("contains: point " + to_string(x) + " is not in the polytope's space");
  }
  for (const auto& e : p.affine_span()) {
    if (pairing(x, e.normal) != e.value) return false;
  }
  for (const auto& f : p.facets()) {
    if (pairing(x, f.normal) < -f.offset) return false;
  }
  return true;
}

std::vector<Point> lattice_points(const Polytope& p) {
  const std::size_t d = p.ambient_dim();
  std::vector<Integer> lo(d), hi(d);
  for (std::size_t j = 0; j < d; ++j) {
    Rational mn = p.vertices().front()[j], mx = mn;
    for (const auto& v : p.vertices()) {
      mn = std::min(mn, v[j]);
      mx = std::max(mx, v[j]);
    }
    lo[j] = ceil(mn);
    hi[j] = floor(mx);
  }
  std::vector<Point> out;
  Point x = origin(p.space(), d);
  std::function<void(std::size_t)> walk = [&](std::size_t j) {
    if (j == d) {
      if (contains(p, x)) out.push_back(x);
      return;
    }
    for (Integer c = lo[j]; c <= hi[j]; ++c) {
      x.coords[j] = Rational(c);
      walk(j + 1);
    }
  };
  walk(0);
  return out;
}

std::string describe(const Facet& f) {
  return "<x," + to_string(f.normal) + "> >= " + to_string(Rational(-f.offset));
}

}  // namespace nefdual
