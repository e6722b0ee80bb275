#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "nefdual/polytope.hpp"
#include "oracles.hpp"

using namespace nefdual;

namespace {

Point m(std::initializer_list<long> c) { return make_point(Space::M, c); }
Point n(std::initializer_list<long> c) { return make_point(Space::N, c); }

Polytope cross2() { return hull({m({1, 0}), m({0, 1}), m({-1, 0}), m({0, -1})}); }
Polytope square(long s) { return hull({m({s, s}), m({s, -s}), m({-s, s}), m({-s, -s})}); }
Polytope triangle() { return hull({m({1, 0}), m({0, 1}), m({-1, -1})}); }

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(to_string(parse_rational("10/5")) == "2");
  CHECK(to_string(Rational(-1, 3)) == "-1/3");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK(floor(Rational(-3, 2)) == -2);
  CHECK(ceil(Rational(-3, 2)) == -1);
  CHECK(primitive({Rational(1, 2), Rational(-1, 3)}) == std::vector<Rational>{3, -2});
}

TEST_CASE("pairing needs dual spaces") {
  CHECK(pairing(m({1, 2}), n({3, -1})) == 1);
  CHECK_THROWS_AS(pairing(m({1, 2}), m({3, -1})), DimensionMismatch);
  CHECK_THROWS_AS(pairing(m({1, 2}), n({3})), DimensionMismatch);
}

TEST_CASE("hull of a single point") {
  Polytope p = hull({m({0, 0})});
  CHECK(p.vertices().size() == 1);
  CHECK(p.facets().empty());
  CHECK(p.affine_span().size() == 2);
  CHECK(p.dim() == 0);
}

TEST_CASE("hull drops interior points") {
  Polytope p = hull({m({1, 0}), m({-1, 0}), m({0, 1}), m({0, -1}), m({0, 0})});
  CHECK(p.vertices().size() == 4);
  CHECK(p == cross2());
  CHECK(p.vertices().front() == m({-1, 0}));
}

TEST_CASE("triangle facets") {
  Polytope p = triangle();
  REQUIRE(p.facets().size() == 3);
  std::vector<Point> normals;
  for (const auto& f : p.facets()) {
    CHECK(f.offset == 1);
    CHECK(f.incidence.size() == 2);
    normals.push_back(f.normal);
  }
  CHECK(normals == std::vector<Point>{n({-1, -1}), n({-1, 2}), n({2, -1})});
}

TEST_CASE("lower-dimensional hulls record their span") {
  Polytope seg = hull({m({-1, 0, 0}), m({0, 0, 0}), m({1, 0, 0})});
  CHECK(seg.vertices() == std::vector<Point>{m({-1, 0, 0}), m({1, 0, 0})});
  CHECK(seg.affine_span().size() == 2);
  CHECK(seg.facets().size() == 2);
  CHECK(contains(seg, m({0, 0, 0})));
  CHECK_FALSE(contains(seg, m({0, 1, 0})));

  Polytope tri = hull({m({0, 0, 0}), m({1, 0, 0}), m({0, 1, 0}), m({1, 1, 0})});
  CHECK(tri.dim() == 2);
  CHECK(tri.vertices().size() == 4);
  CHECK(tri.facets().size() == 4);
  for (const auto& f : tri.facets()) CHECK(f.incidence.size() == 2);
}

TEST_CASE("hull rejects mixed input") {
  CHECK_THROWS_AS(hull({m({0, 0}), m({0, 0, 0})}), DimensionMismatch);
  CHECK_THROWS_AS(hull({m({0, 0}), n({0, 0})}), DimensionMismatch);
  CHECK_THROWS_AS(hull({}), std::invalid_argument);
}

TEST_CASE("polar duals") {
  Polytope cube = square(1);
  Polytope pc = polar_dual(cube);
  CHECK(pc.space() == Space::N);
  CHECK(pc.vertices() == std::vector<Point>{n({-1, 0}), n({0, -1}), n({0, 1}), n({1, 0})});

  Polytope pt = polar_dual(triangle());
  CHECK(pt.vertices() == std::vector<Point>{n({-1, -1}), n({-1, 2}), n({2, -1})});
  CHECK(polar_dual(pt) == triangle());

  CHECK_THROWS_AS(polar_dual(hull({m({0, 0}), m({1, 0}), m({0, 1})})), ZeroNotInterior);
  CHECK_THROWS_AS(polar_dual(hull({m({-1, 0}), m({1, 0})})), NotFullDimensional);
}

TEST_CASE("lattice and reflexive predicates") {
  CHECK(is_lattice(triangle()));
  CHECK_FALSE(is_lattice(hull({Point(Space::M, {Rational(1, 2), 0}), m({0, 1}), m({-1, -1})})));
  CHECK(is_lattice(polar_dual(square(1))));

  CHECK(is_reflexive(cross2()));
  CHECK(is_reflexive(square(1)));
  CHECK_FALSE(is_reflexive(hull({m({2, 0}), m({0, 1}), m({-2, -1})})));
  auto big = check_reflexive(square(2));
  CHECK_FALSE(big.reflexive);
  REQUIRE(big.bad_facet);
  CHECK(square(2).facets()[*big.bad_facet].offset == 2);
  CHECK_FALSE(is_reflexive(hull({m({0, 0}), m({1, 0}), m({0, 1})})));
}

TEST_CASE("minkowski sums") {
  Polytope a = hull({m({-1, 0}), m({1, 0})});
  Polytope b = hull({m({0, -1}), m({0, 1})});
  CHECK(minkowski_sum(a, b) == square(1));
  CHECK(minkowski_sum(cross2(), hull({m({0, 0})})) == cross2());

  Polytope seg = hull({m({-1, 0, 0}), m({0, 0, 0})});
  std::vector<Point> box;
  for (long y : {-1, 1})
    for (long z : {-1, 1})
      for (long x : {0, 1}) box.push_back(m({x, y, z}));
  Polytope cube = fixtures::polytope("cube3.txt");
  CHECK(minkowski_sum(seg, hull(box)) == cube);
  CHECK_THROWS_AS(minkowski_sum(a, hull({m({0, 0, 0})})), DimensionMismatch);
}

TEST_CASE("membership") {
  CHECK(contains(cross2(), m({0, 0})));
  CHECK_FALSE(contains(cross2(), m({1, 1})));
  CHECK(contains(cross2(), Point(Space::M, {Rational(1, 2), Rational(1, 2)})));
  CHECK_THROWS_AS(contains(cross2(), n({0, 0})), DimensionMismatch);
}

TEST_CASE("lattice points") {
  CHECK(lattice_points(cross2()).size() == 5);
  CHECK(lattice_points(hull({m({-1, 0}), m({1, 0})})).size() == 3);
  CHECK(lattice_points(square(1)).size() == 9);
  auto pts = lattice_points(square(1));
  CHECK(std::is_sorted(pts.begin(), pts.end()));
}

TEST_CASE("solve_linear") {
  auto a = solve_linear({{m({1, 0}), 1}, {m({0, 1}), 0}});
  REQUIRE(a.status == SolveStatus::Unique);
  CHECK(*a.solution == n({1, 0}));
  auto b = solve_linear({{m({1, 1}), 1}, {m({1, -1}), 0}});
  REQUIRE(b.status == SolveStatus::Unique);
  CHECK(*b.solution == Point(Space::N, {Rational(1, 2), Rational(1, 2)}));
  CHECK(solve_linear({{m({1, 0}), 1}, {m({2, 0}), 0}}).status == SolveStatus::Inconsistent);
  CHECK(solve_linear({{m({1, 0}), 1}}).status == SolveStatus::Underdetermined);
}

TEST_CASE("inequality descriptions and intersections") {
  std::vector<Inequality> box;
  for (long s : {-1, 1}) {
    box.push_back({n({s, 0}), 1});
    box.push_back({n({0, s}), 1});
  }
  auto p = from_inequalities(Space::M, 2, box);
  REQUIRE(p);
  CHECK(*p == square(1));

  auto empty = from_inequalities(Space::M, 1, {{n({1}), -2}, {n({-1}), -2}});
  CHECK_FALSE(empty);
  CHECK_THROWS_AS(from_inequalities(Space::M, 2, {{n({1, 0}), 1}}), Unbounded);

  auto meet = intersect(hull({m({0, 0}), m({1, 0}), m({0, 1})}), hull({m({0, 0}), m({-1, 0})}));
  REQUIRE(meet);
  CHECK(*meet == hull({m({0, 0})}));
  CHECK_FALSE(intersect(hull({m({1, 1})}), hull({m({0, 0}), m({1, 0})})));
}

TEST_CASE("property: hull invariants on random point sets") {
  std::mt19937 rng(20261017);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t d = 1 + trial % 3;
    auto pts = oracle::random_points(rng, d, 1 + trial % 9, 3);
    Polytope p = hull(pts);
    CHECK(hull(p.vertices()) == p);
    for (const auto& x : pts) CHECK(contains(p, x));
    for (const auto& f : p.facets()) {
      for (const auto& x : pts) CHECK(pairing(x, f.normal) >= -f.offset);
      CHECK(primitive(f.normal.coords) == f.normal.coords);
    }
    for (std::size_t v = 0; v < p.vertices().size(); ++v) {
      auto others = p.vertices();
      others.erase(others.begin() + static_cast<long>(v));
      if (!others.empty()) CHECK_FALSE(oracle::in_convex_hull(oracle::coords(others), p.vertices()[v].coords));
    }
    // Brute-force membership agrees on a sample of lattice points.
    auto probe = oracle::random_points(rng, d, 6, 3);
    for (const auto& x : probe) {
      CHECK(contains(p, x) == oracle::in_convex_hull(oracle::coords(p.vertices()), x.coords));
    }
  }
}

TEST_CASE("property: full-dimensional hulls match brute-force facets") {
  std::mt19937 rng(7);
  int checked = 0;
  while (checked < 60) {
    std::size_t d = 2 + checked % 2;
    Polytope p = hull(oracle::random_points(rng, d, 4 + checked % 6, 2));
    if (!p.is_full_dimensional()) continue;
    auto facets = oracle::facets_of_points(oracle::coords(p.vertices()));
    REQUIRE(facets.size() == p.facets().size());
    for (std::size_t i = 0; i < facets.size(); ++i) {
      CHECK(facets[i].normal == p.facets()[i].normal.coords);
      CHECK(facets[i].offset == p.facets()[i].offset);
    }
    ++checked;
  }
}

TEST_CASE("property: minkowski sum is commutative and associative") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t d = 2 + trial % 2;
    Polytope a = hull(oracle::random_points(rng, d, 3, 2));
    Polytope b = hull(oracle::random_points(rng, d, 3, 2));
    Polytope c = hull(oracle::random_points(rng, d, 2, 2));
    CHECK(minkowski_sum(a, b) == minkowski_sum(b, a));
    CHECK(minkowski_sum(minkowski_sum(a, b), c) == minkowski_sum(a, minkowski_sum(b, c)));
    CHECK(minkowski_sum(a, hull({origin(Space::M, d)})) == a);
  }
}

TEST_CASE("property: reflexivity agrees with lattice polar") {
  std::mt19937 rng(3);
  int checked = 0;
  while (checked < 100) {
    std::size_t d = 1 + checked % 3;
    Polytope p = hull(oracle::random_points(rng, d, d + 1 + checked % 6, 2));
    if (!has_interior_origin(p)) continue;
    CHECK(is_reflexive(p) == (is_lattice(p) && is_lattice(polar_dual(p))));
    CHECK(polar_dual(polar_dual(p)) == p);
    ++checked;
  }
}

TEST_CASE("corpus polytopes are reflexive and bidual") {
  for (const auto& name : fixtures::corpus()) {
    CAPTURE(name);
    Polytope p = fixtures::polytope(name);
    CHECK(is_reflexive(p));
    CHECK(polar_dual(polar_dual(p)) == p);
    CHECK(is_reflexive(polar_dual(p)));
  }
}
