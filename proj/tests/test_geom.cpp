#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "trigbash/geom.hpp"
#include "trigbash/sampling.hpp"

using namespace trigbash;

TEST_CASE("dist basics") {
  CHECK(dist({0, 0}, {3, 4}) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(dist({1, 1}, {1, 1}) == 0.0);
  Point p(0.3, 0.7), q(-1.2, 2.5);
  double expected = std::hypot(0.3 - (-1.2), 0.7 - 2.5);
  CHECK(std::abs(dist(p, q) - expected) < 1e-12);
}

TEST_CASE("dist triangle inequality on sampled triples") {
  Rng rng(101);
  for (int i = 0; i < 1000; ++i) {
    Point a(rng.uniform(-5, 5), rng.uniform(-5, 5));
    Point b(rng.uniform(-5, 5), rng.uniform(-5, 5));
    Point c(rng.uniform(-5, 5), rng.uniform(-5, 5));
    CHECK(dist(a, c) <= dist(a, b) + dist(b, c) + 1e-12);
  }
}

TEST_CASE("signed_area orientation and collinearity") {
  CHECK(signed_area({0, 0}, {1, 0}, {0, 1}) == doctest::Approx(0.5));
  CHECK(signed_area({0, 0}, {0, 1}, {1, 0}) == doctest::Approx(-0.5));
  CHECK(signed_area({0, 0}, {1, 1}, {2, 2}) == 0.0);
}

TEST_CASE("signed_area antisymmetry and rigid-motion invariance") {
  Rng rng(17);
  for (int i = 0; i < 500; ++i) {
    Point a(rng.uniform(-2, 2), rng.uniform(-2, 2));
    Point b(rng.uniform(-2, 2), rng.uniform(-2, 2));
    Point c(rng.uniform(-2, 2), rng.uniform(-2, 2));
    double s = signed_area(a, b, c);
    CHECK(std::abs(signed_area(b, a, c) + s) < 1e-12);
    CHECK(std::abs(signed_area(a, c, b) + s) < 1e-12);
    double th = rng.uniform(0, 2 * M_PI);
    Vec2 t(rng.uniform(-3, 3), rng.uniform(-3, 3));
    auto rot = [&](const Point& p) {
      return Point(std::cos(th) * p.x() - std::sin(th) * p.y() + t.x(),
                   std::sin(th) * p.x() + std::cos(th) * p.y() + t.y());
    };
    CHECK(std::abs(signed_area(rot(a), rot(b), rot(c)) - s) < 1e-12);
  }
}

TEST_CASE("angle_at basics") {
  Point a(0, 0), b(1, 0), c(0.5, std::sqrt(3) / 2);
  CHECK(angle_at(a, b, c).radians == doctest::Approx(M_PI / 3).epsilon(1e-12));
  CHECK(angle_at(b, a, c).radians == doctest::Approx(M_PI / 3).epsilon(1e-12));
  CHECK(angle_at(c, a, b).radians == doctest::Approx(M_PI / 3).epsilon(1e-12));
  CHECK(angle_at({0, 0}, {1, 0}, {0, 1}).radians == doctest::Approx(M_PI / 2));
  CHECK_THROWS_AS(angle_at({0, 0}, {0, 0}, {1, 1}), GeomError);
}

TEST_CASE("angle_at matches the acos oracle") {
  Rng rng(23);
  for (int i = 0; i < 1000; ++i) {
    Triangle t = oracles::random_triangle(rng);
    CHECK(std::abs(angle_at(t.a, t.b, t.c).radians - oracles::angle_acos(t.a, t.b, t.c)) < 1e-12);
  }
}

TEST_CASE("angle sum is pi") {
  Rng rng(29);
  for (int i = 0; i < 1000; ++i) {
    Triangle t = oracles::random_triangle(rng, 5.0);
    double sum = angle_at(t.a, t.b, t.c).radians + angle_at(t.b, t.c, t.a).radians +
                 angle_at(t.c, t.a, t.b).radians;
    CHECK(std::abs(sum - M_PI) < 1e-10);
  }
}

TEST_CASE("directed_ratio convention") {
  CHECK(directed_ratio({0.5, 0}, {0, 0}, {1, 0}) == doctest::Approx(1.0));
  CHECK(directed_ratio({2, 0}, {0, 0}, {1, 0}) == doctest::Approx(-2.0));
  CHECK(directed_ratio({-1, 0}, {0, 0}, {1, 0}) == doctest::Approx(-0.5));
  CHECK_THROWS_AS(directed_ratio({0.5, 0.3}, {0, 0}, {1, 0}), GeomError);  // off the line
  CHECK_THROWS_AS(directed_ratio({1, 0}, {0, 0}, {1, 0}), GeomError);      // X = Q
}

TEST_CASE("directed_ratio midpoint is exactly 1 on random segments") {
  Rng rng(31);
  for (int i = 0; i < 1000; ++i) {
    Point p(rng.uniform(-4, 4), rng.uniform(-4, 4));
    Point q(rng.uniform(-4, 4), rng.uniform(-4, 4));
    if (dist(p, q) < 1e-6) continue;
    CHECK(std::abs(directed_ratio(0.5 * (p + q), p, q) - 1.0) < 1e-12);
  }
}

TEST_CASE("is_collinear") {
  TolerancePolicy tol;
  CHECK(is_collinear({Point(0, 0), Point(1, 1), Point(2, 2)}, tol));
  CHECK_FALSE(is_collinear({Point(0, 0), Point(1, 0), Point(0, 1)}, tol));
  Rng rng(37);
  for (int i = 0; i < 100; ++i) {
    // points on a random line nudged well below tolerance stay collinear
    Point p(rng.uniform(-1, 1), rng.uniform(-1, 1));
    double th = rng.uniform(0, M_PI);
    Vec2 d(std::cos(th), std::sin(th));
    auto jig = [&](double t) {
      return Point(p + t * d + 1e-13 * Vec2(rng.uniform(-1, 1), rng.uniform(-1, 1)));
    };
    Point p1 = jig(0.0), p2 = jig(1.0), p3 = jig(2.3);
    const Point pts[] = {p1, p2, p3};
    CHECK(is_collinear({p1, p2, p3}, tol.with_scale(scale_of(pts))));
  }
}

TEST_CASE("is_concyclic") {
  TolerancePolicy tol;
  auto at = [](double deg) {
    return Point(std::cos(deg * M_PI / 180), std::sin(deg * M_PI / 180));
  };
  CHECK(is_concyclic(at(0), at(90), at(180), at(250), tol));
  CHECK(is_concyclic({0, 0}, {1, 0}, {1, 1}, {0, 1}, tol));
  CHECK_FALSE(is_concyclic(at(0), at(90), at(180), {0, 0}, tol));
  CHECK_THROWS_AS(is_concyclic(at(0), at(0), at(90), at(180), tol), GeomError);
}

TEST_CASE("perpendicular and parallel predicates") {
  TolerancePolicy tol;
  Line x_axis({0, 1}, 0), y_axis({1, 0}, 0), y3({0, 1}, 3);
  CHECK(is_perpendicular(x_axis, y_axis, tol));
  CHECK(is_parallel(x_axis, y3, tol));
  Line l45 = Line::from_point_dir({0, 0}, {std::cos(M_PI / 4), std::sin(M_PI / 4)});
  Line l46 = Line::from_point_dir({0, 0}, {std::cos(46 * M_PI / 180), std::sin(46 * M_PI / 180)});
  CHECK_FALSE(is_perpendicular(l45, l46, tol));
  CHECK_FALSE(is_parallel(l45, l46, tol));
}

TEST_CASE("perpendicular and parallel are mutually exclusive at rel_eps <= 1e-3") {
  Rng rng(41);
  TolerancePolicy tol;
  tol.rel_eps = 1e-3;
  for (int i = 0; i < 2000; ++i) {
    double t1 = rng.uniform(0, M_PI), t2 = rng.uniform(0, M_PI);
    Line l1 = Line::from_point_dir({rng.uniform(-1, 1), rng.uniform(-1, 1)},
                                   {std::cos(t1), std::sin(t1)});
    Line l2 = Line::from_point_dir({rng.uniform(-1, 1), rng.uniform(-1, 1)},
                                   {std::cos(t2), std::sin(t2)});
    bool both = is_perpendicular(l1, l2, tol) && is_parallel(l1, l2, tol);
    CHECK_FALSE(both);
  }
}

TEST_CASE("line and circle construction guards") {
  Line l = Line::through({0, 0}, {2, 0});
  CHECK(std::abs(l.normal().norm() - 1.0) < 1e-12);
  CHECK(std::abs(l.signed_dist({1, 5}) - 5.0) < 1e-12);
  CHECK_THROWS_AS(Line::through({1, 1}, {1, 1}), GeomError);
  CHECK_THROWS_AS(Circle({0, 0}, 0.0), GeomError);
  CHECK_THROWS_AS(Circle({0, 0}, -1.0), GeomError);
}

TEST_CASE("no NaN escapes public operations near degeneracy") {
  Rng rng(83);
  for (int i = 0; i < 2000; ++i) {
    // nearly collinear triples and nearly coincident pairs
    Point a(rng.uniform(-1, 1), rng.uniform(-1, 1));
    Vec2 d(std::cos(rng.uniform(0, M_PI)), std::sin(rng.uniform(0, M_PI)));
    Point b = a + rng.uniform(0.1, 1.0) * d;
    Point c = b + rng.uniform(0.1, 1.0) * d + 1e-13 * perp(d);
    CHECK(std::isfinite(dist(a, b)));
    CHECK(std::isfinite(signed_area(a, b, c)));
    try {
      CHECK(std::isfinite(angle_at(a, b, c).radians));
      CHECK(std::isfinite(directed_ratio(b, a, c)));
    } catch (const GeomError&) {
      // precondition rejections are fine; silent NaN is not
    }
  }
}

TEST_CASE("scale_of is the bounding-box diameter") {
  const Point pts[] = {Point(0, 0), Point(3, 0), Point(0, 4)};
  CHECK(scale_of(pts) == doctest::Approx(5.0));
}
