#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bkm/errors.hpp"
#include "bkm/geometry.hpp"

using namespace bkm;

TEST_CASE("ellipse_knots places knots at uniform parametric angles") {
  const Ellipse e(Point(0.0, 0.0), 2.0, 1.0);
  const auto knots = ellipse_knots(e, 4);
  REQUIRE(knots.num_boundary() == 4);
  CHECK(knots.num_interior() == 0);
  const double expected[4][2] = {{2, 0}, {0, 1}, {-2, 0}, {0, -1}};
  for (int k = 0; k < 4; ++k) {
    CHECK(std::abs(knots.position(k).x() - expected[k][0]) < 1e-15);
    CHECK(std::abs(knots.position(k).y() - expected[k][1]) < 1e-15);
  }
  const auto& n0 = knots.boundary()[0].normal;
  CHECK(n0.x() == 1.0);
  CHECK(n0.y() == 0.0);
}

TEST_CASE("ellipse_knots on the unit circle") {
  const Ellipse e(Point(0.0, 0.0), 1.0, 1.0);
  const auto knots = ellipse_knots(e, 3);
  const auto& k = knots.boundary()[1];
  CHECK(k.position.x() == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(k.position.y() == doctest::Approx(0.8660254037844386).epsilon(1e-12));
  CHECK(k.normal.x() == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(k.normal.y() == doctest::Approx(0.8660254037844386).epsilon(1e-12));
}

TEST_CASE("ellipse_knots rejects n = 0 and bad ellipses") {
  const Ellipse e(Point(0.0, 0.0), 2.0, 1.0);
  CHECK_THROWS_AS(ellipse_knots(e, 0), InvalidArgument);
  CHECK_THROWS_AS(Ellipse(Point(0.0, 0.0), 1.0, 2.0), InvalidArgument);
  CHECK_THROWS_AS(Ellipse(Point(0.0, 0.0), 1.0, 0.0), InvalidArgument);
}

TEST_CASE("ellipse knots lie on the ellipse with outward unit normals") {
  for (std::size_t n : {1u, 5u, 7u, 16u, 101u}) {
    const Ellipse e(Point(3.0, -1.0), 1.5, 0.5);
    const auto knots = ellipse_knots(e, n);
    for (const auto& k : knots.boundary()) {
      const double u = (k.position.x() - 3.0) / 1.5;
      const double v = (k.position.y() + 1.0) / 0.5;
      CHECK(std::abs(u * u + v * v - 1.0) < 1e-12);
      CHECK(std::abs(k.normal.norm() - 1.0) < 1e-12);
      CHECK(dot(k.normal, k.position - e.center) > 0.0);
    }
  }
}

TEST_CASE("radial_distance examples") {
  CHECK(radial_distance(Point(0, 0), Point(0, 0)) == 0.0);
  CHECK(radial_distance(Point(0, 0), Point(3, 4)) == 5.0);
  CHECK(radial_distance(Point(1.5, 0), Point(1.2, -0.35)) ==
        doctest::Approx(0.4609772228646444).epsilon(1e-14));
  CHECK_THROWS_AS(radial_distance(Point(0, 0), Point(0, 0, 0)), InvalidArgument);
}

TEST_CASE("radial_distance satisfies the metric axioms") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int i = 0; i < 500; ++i) {
    const Point a(u(rng), u(rng), u(rng));
    const Point b(u(rng), u(rng), u(rng));
    const Point c(u(rng), u(rng), u(rng));
    CHECK(radial_distance(a, b) == radial_distance(b, a));
    CHECK(radial_distance(a, a) == 0.0);
    CHECK(radial_distance(a, b) > 0.0);
    CHECK(radial_distance(a, c) <= radial_distance(a, b) + radial_distance(b, c) + 1e-12);
  }
}

TEST_CASE("normal_projection") {
  const Point n(1.0, 0.0);
  CHECK(normal_projection(Point(1, 0), Point(0, 0), n) == 1.0);
  CHECK(normal_projection(Point(0, 1), Point(0, 0), n) == 0.0);
  CHECK(normal_projection(Point(0.3, 0.2), Point(0.3, 0.2), n) == 0.0);

  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 200; ++i) {
    const double t = u(rng);
    const Point dir(std::cos(t), std::sin(t));
    CHECK(std::abs(normal_projection(Point(u(rng), u(rng)), Point(u(rng), u(rng)), dir)) <=
          1.0 + 1e-15);
  }
}

TEST_CASE("KnotSet validation") {
  const Point n(1.0, 0.0);
  CHECK_THROWS_AS(KnotSet({}), InvalidArgument);
  CHECK_THROWS_AS(KnotSet({{Point(0, 0), n}, {Point(0, 0), n}}), DegenerateGeometry);
  CHECK_THROWS_AS(KnotSet({{Point(0, 0), n}}, {Point(0, 0)}), DegenerateGeometry);
  CHECK_THROWS_AS(KnotSet({{Point(0, 0), Point(2.0, 0.0)}}), InvalidArgument);
  CHECK_THROWS_AS(KnotSet({{Point(0, 0), n}}, {Point(1, 0, 0)}), InvalidArgument);

  const KnotSet ks({{Point(0, 0), n, BoundaryType::dirichlet},
                    {Point(1, 0), n, BoundaryType::neumann}},
                   {Point(0.5, 0.1)});
  CHECK(ks.size() == 3);
  CHECK(ks.num_neumann() == 1);
  CHECK(ks.num_dirichlet() == 1);
  CHECK(ks.position(2) == Point(0.5, 0.1));
}

TEST_CASE("Point rejects non-finite coordinates and bad dimensions") {
  CHECK_THROWS_AS(Point(NAN, 0.0), InvalidArgument);
  const double four[4] = {1, 2, 3, 4};
  CHECK_THROWS_AS(Point(std::span<const double>(four, 4)), InvalidArgument);
}
