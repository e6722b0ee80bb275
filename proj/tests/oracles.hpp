#pragma once

// Brute-force reference computations for tests. Nothing here calls into
// the hull, fan or partition code; only Point/Rational are shared.

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "nefdual/point.hpp"

namespace oracle {

using nefdual::Point;
using nefdual::Rational;
using nefdual::Space;
using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

// Determinant by cofactor expansion; fine for the d <= 4 systems used here.
inline Rational det(const Mat& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  Rational s = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    Mat minor;
    for (std::size_t r = 1; r < n; ++r) {
      Vec row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(row);
    }
    Rational term = m[0][c] * det(minor);
    s += (c % 2 == 0) ? term : Rational(-term);
  }
  return s;
}

// Cramer's rule for a square system; nullopt when singular.
inline std::optional<Vec> cramer(const Mat& a, const Vec& b) {
  Rational d = det(a);
  if (d == 0) return std::nullopt;
  Vec x(a.size());
  for (std::size_t c = 0; c < a.size(); ++c) {
    Mat ac = a;
    for (std::size_t r = 0; r < a.size(); ++r) ac[r][c] = b[r];
    x[c] = det(ac) / d;
  }
  return x;
}

inline Rational dot(const Vec& a, const Vec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline void for_each_subset(std::size_t n, std::size_t k,
                            const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == k) {
      f(idx);
      return;
    }
    for (std::size_t i = start; i + (k - pos) <= n; ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

// Vertices of {y : <a_i, y> >= b_i} (bounded, full-dimensional) by solving
// every d-subset of tight constraints and keeping feasible solutions.
inline std::vector<Vec> vertices_of_halfspaces(const std::vector<Vec>& a, const Vec& b,
                                               std::size_t d) {
  std::set<Vec> found;
  for_each_subset(a.size(), d, [&](const std::vector<std::size_t>& s) {
    Mat m;
    Vec rhs;
    for (auto i : s) {
      m.push_back(a[i]);
      rhs.push_back(b[i]);
    }
    auto y = cramer(m, rhs);
    if (!y) return;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (dot(a[i], *y) < b[i]) return;
    }
    found.insert(*y);
  });
  return {found.begin(), found.end()};
}

struct Halfspace {
  Vec normal;  // primitive integral
  Rational offset;  // <x, normal> >= -offset
  bool operator<(const Halfspace& o) const {
    return normal != o.normal ? normal < o.normal : offset < o.offset;
  }
  bool operator==(const Halfspace& o) const { return normal == o.normal && offset == o.offset; }
};

inline Vec make_primitive(Vec v) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  nefdual::Integer l = 1, g = 0;
  for (auto& x : v) l = boost::multiprecision::lcm(l, nefdual::Integer(denominator(x)));
  for (auto& x : v) g = boost::multiprecision::gcd(g, nefdual::Integer(numerator(Rational(x * l))));
  if (g == 0) return v;
  for (auto& x : v) x = x * l / Rational(g);
  return v;
}

// Facets of a full-dimensional point set: every hyperplane through d
// affinely independent points with all points on one side.
inline std::vector<Halfspace> facets_of_points(const std::vector<Vec>& pts) {
  const std::size_t d = pts.front().size();
  std::set<Halfspace> found;
  for_each_subset(pts.size(), d, [&](const std::vector<std::size_t>& s) {
    // Normal n with <p_s0 - p_sk, n> = 0: cofactors of the (d-1) x d difference matrix.
    Mat diff;
    for (std::size_t k = 1; k < d; ++k) {
      Vec row(d);
      for (std::size_t j = 0; j < d; ++j) row[j] = pts[s[k]][j] - pts[s[0]][j];
      diff.push_back(row);
    }
    Vec n(d);
    for (std::size_t c = 0; c < d; ++c) {
      Mat minor;
      for (const auto& row : diff) {
        Vec r;
        for (std::size_t j = 0; j < d; ++j) {
          if (j != c) r.push_back(row[j]);
        }
        minor.push_back(r);
      }
      Rational m = det(minor);
      n[c] = (c % 2 == 0) ? m : Rational(-m);
    }
    if (std::all_of(n.begin(), n.end(), [](const Rational& x) { return x == 0; })) return;
    Rational level = dot(n, pts[s[0]]);
    bool above = false, below = false;
    for (const auto& p : pts) {
      Rational v = dot(n, p) - level;
      if (v > 0) above = true;
      if (v < 0) below = true;
    }
    if (above && below) return;
    if (below) {
      for (auto& x : n) x = -x;
      level = -level;
    }
    Vec pn = make_primitive(n);
    Rational scale = pn[0] != 0 ? pn[0] / n[0] : Rational(0);
    for (std::size_t j = 0; scale == 0 && j < d; ++j) {
      if (n[j] != 0) scale = pn[j] / n[j];
    }
    found.insert({pn, -level * scale});
  });
  return {found.begin(), found.end()};
}

// Solves an arbitrary (possibly non-square) system by Gaussian elimination;
// returns the solution only when it exists and is unique.
inline std::optional<Vec> unique_solution(Mat a, Vec b) {
  const std::size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
  std::size_t r = 0;
  std::vector<std::size_t> piv;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c] / a[r][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    piv.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (b[i] != 0) return std::nullopt;
  }
  if (r < cols) return std::nullopt;
  Vec x(cols);
  for (std::size_t i = 0; i < r; ++i) x[piv[i]] = b[i] / a[i][piv[i]];
  return x;
}

// x in Conv(points), via Caratheodory: some affinely independent subset
// carries x with nonnegative barycentric coordinates.
inline bool in_convex_hull(const std::vector<Vec>& pts, const Vec& x) {
  const std::size_t d = x.size();
  for (std::size_t k = 1; k <= std::min(d + 1, pts.size()); ++k) {
    bool hit = false;
    for_each_subset(pts.size(), k, [&](const std::vector<std::size_t>& s) {
      if (hit) return;
      Mat a(d + 1, Vec(k));
      Vec b(d + 1);
      for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t c = 0; c < k; ++c) a[j][c] = pts[s[c]][j];
        b[j] = x[j];
      }
      for (std::size_t c = 0; c < k; ++c) a[d][c] = 1;
      b[d] = 1;
      auto lam = unique_solution(a, b);
      if (lam && std::all_of(lam->begin(), lam->end(), [](const Rational& v) { return v >= 0; })) {
        hit = true;
      }
    });
    if (hit) return true;
  }
  return false;
}

// Direct check of the nef condition: on every facet cone the indicator
// values extend linearly, the pieces are integral, and each indicator is
// the maximum of its pieces at every vertex. `verts` must be the vertex
// set of a reflexive polytope.
inline bool is_nef(const std::vector<Vec>& verts, const std::vector<std::vector<std::size_t>>& parts) {
  const std::size_t d = verts.front().size();
  const auto facets = facets_of_points(verts);
  for (const auto& part : parts) {
    Vec value(verts.size(), Rational(0));
    for (auto v : part) value[v] = 1;
    std::vector<Vec> pieces;
    for (const auto& f : facets) {
      std::vector<std::size_t> on;
      for (std::size_t v = 0; v < verts.size(); ++v) {
        if (dot(verts[v], f.normal) == -f.offset) on.push_back(v);
      }
      std::optional<Vec> u;
      for_each_subset(on.size(), d, [&](const std::vector<std::size_t>& s) {
        if (u) return;
        Mat a;
        Vec b;
        for (auto k : s) {
          a.push_back(verts[on[k]]);
          b.push_back(value[on[k]]);
        }
        u = cramer(a, b);
      });
      if (!u) return false;
      for (auto v : on) {
        if (dot(verts[v], *u) != value[v]) return false;
      }
      for (const auto& x : *u) {
        if (!nefdual::is_integer(x)) return false;
      }
      pieces.push_back(*u);
    }
    for (std::size_t v = 0; v < verts.size(); ++v) {
      for (const auto& u : pieces) {
        if (dot(verts[v], u) > value[v]) return false;
      }
    }
  }
  return true;
}

inline std::vector<Vec> coords(const std::vector<Point>& pts) {
  std::vector<Vec> out;
  for (const auto& p : pts) out.push_back(p.coords);
  return out;
}

inline std::vector<Point> points(Space s, const std::vector<Vec>& vs) {
  std::vector<Point> out;
  for (const auto& v : vs) out.emplace_back(s, v);
  std::sort(out.begin(), out.end());
  return out;
}

// Random lattice points in [-range, range]^d.
inline std::vector<Point> random_points(std::mt19937& rng, std::size_t d, std::size_t n, int range) {
  std::uniform_int_distribution<int> coord(-range, range);
  std::vector<Point> out;
  for (std::size_t i = 0; i < n; ++i) {
    Vec c;
    for (std::size_t j = 0; j < d; ++j) c.emplace_back(coord(rng));
    out.emplace_back(Space::M, c);
  }
  return out;
}

}  // namespace oracle
