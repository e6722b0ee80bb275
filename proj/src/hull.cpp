#include <algorithm>
#include <stdexcept>

#include "double_description.hpp"
#include "nefdual/polytope.hpp"

namespace nefdual {

namespace {

bool facet_less(const Facet& a, const Facet& b) {
  if (a.normal != b.normal) return a.normal < b.normal;
  return a.offset < b.offset;
}

}  // namespace

Polytope hull(const std::vector<Point>& input) {
  if (input.empty()) throw std::invalid_argument("hull: empty point set");
  const Point& first = input.front();
  for (const auto& p : input) require_compatible(first, p, "hull");

  std::vector<Point> pts = input;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  Polytope out;
  out.space_ = first.space;
  out.ambient_dim_ = first.dim();
  const std::size_t d = first.dim();
  const Space dual_space = dual(first.space);

  // Affine span: directions p_i - p_0, equations from their nullspace.
  const Point& base = pts.front();
  Matrix directions;
  for (std::size_t i = 1; i < pts.size(); ++i) directions.push_back((pts[i] - base).coords);
  Matrix reduced = directions;
  std::vector<std::size_t> pivots = row_reduce(reduced);
  if (directions.empty()) {
    for (std::size_t j = 0; j < d; ++j) {
      Point n = origin(dual_space, d);
      n.coords[j] = 1;
      out.affine_span_.push_back({n, base.coords[j]});
    }
  } else {
    for (auto& v : nullspace(directions, d)) {
      Point n(dual_space, std::move(v));
      Rational value = pairing(base, n);
      out.affine_span_.push_back({std::move(n), std::move(value)});
    }
  }
  std::sort(out.affine_span_.begin(), out.affine_span_.end(),
            [](const Equation& a, const Equation& b) { return a.normal < b.normal; });

  const std::size_t k = pivots.size();
  if (k == 0) {
    out.vertices_ = {base};
    return out;
  }

  // The projection onto the pivot coordinates is injective on the span, so
  // facets of the projected point set lift with zeros elsewhere.
  Matrix rows;
  rows.reserve(pts.size());
  std::vector<std::vector<Rational>> projected;
  for (const auto& p : pts) {
    std::vector<Rational> q(k);
    for (std::size_t j = 0; j < k; ++j) q[j] = p.coords[pivots[j]];
    std::vector<Rational> row = q;
    row.push_back(1);
    rows.push_back(primitive(row));
    projected.push_back(std::move(q));
  }

  Matrix rays = detail::extreme_rays(rows, k + 1);

  struct RawFacet {
    std::vector<Rational> a;
    Rational b;
  };
  std::vector<RawFacet> raw;
  for (auto& z : rays) {
    std::vector<Rational> a(z.begin(), z.begin() + k);
    Rational c = primitive_scale(a);
    for (auto& x : a) x *= c;
    raw.push_back({std::move(a), z[k] * c});
  }

  std::vector<Point> vertices;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Matrix tight;
    for (const auto& f : raw) {
      if (dot(f.a, projected[i]) + f.b == 0) tight.push_back(f.a);
    }
    if (tight.size() >= k && rank(tight) == k) vertices.push_back(pts[i]);
  }
  // pts is sorted, so vertices already are.
  out.vertices_ = std::move(vertices);

  for (auto& f : raw) {
    Facet facet;
    facet.normal = origin(dual_space, d);
    for (std::size_t j = 0; j < k; ++j) facet.normal.coords[pivots[j]] = f.a[j];
    facet.offset = f.b;
    for (std::size_t v = 0; v < out.vertices_.size(); ++v) {
      if (pairing(out.vertices_[v], facet.normal) == -facet.offset) facet.incidence.push_back(v);
    }
    out.facets_.push_back(std::move(facet));
  }
  std::sort(out.facets_.begin(), out.facets_.end(), facet_less);
  return out;
}

std::optional<Polytope> from_inequalities(Space space, std::size_t dim,
                                          const std::vector<Inequality>& inequalities,
                                          const std::vector<Equation>& equations) {
  if (dim == 0) throw std::invalid_argument("from_inequalities: zero ambient dimension");
  const Space dual_space = dual(space);
  auto check = [&](const Point& n) {
    if (n.space != dual_space || n.dim() != dim) {
      throw DimensionMismatch("from_inequalities: constraint normal " + to_string(n) +
                              " is not in the dual space");
    }
  };

  // Homogenize: (x, t) with t >= 0; vertices are rays with t > 0.
  Matrix rows;
  for (const auto& ineq : inequalities) {
    check(ineq.normal);
    auto row = ineq.normal.coords;
    row.push_back(ineq.offset);
    rows.push_back(std::move(row));
  }
  for (const auto& eq : equations) {
    check(eq.normal);
    auto row = eq.normal.coords;
    row.push_back(-eq.value);
    rows.push_back(row);
    for (auto& x : row) x = -x;
    rows.push_back(std::move(row));
  }
  std::vector<Rational> t_row(dim + 1, Rational(0));
  t_row[dim] = 1;
  rows.push_back(t_row);

  // A lineality space (necessarily inside t = 0) is cut away; if the system
  // is feasible it makes the solution set unbounded.
  Matrix lineality = nullspace(rows, dim + 1);
  for (auto& l : lineality) {
    rows.push_back(l);
    for (auto& x : l) x = -x;
    rows.push_back(l);
  }

  Matrix rays = detail::extreme_rays(rows, dim + 1);
  std::vector<Point> points;
  bool recession = !lineality.empty();
  for (const auto& z : rays) {
    if (z[dim] == 0) {
      recession = true;
      continue;
    }
    Point p(space, std::vector<Rational>(z.begin(), z.begin() + dim));
    points.push_back(Rational(1) / z[dim] * p);
  }
  if (points.empty()) return std::nullopt;
  if (recession) throw Unbounded();
  return hull(points);
}

}  // namespace nefdual
