#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diskpack/geom_core.hpp"
#include "support/oracles.hpp"

#include <cmath>
#include <limits>
#include <numbers>

using namespace diskpack;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;
// Reference value computed by the clipping oracle at the vertex direction.
constexpr double kDelta = 1.6645382445539252;

Circle disk_through_center(double theta)
{
  return {Point(std::cos(theta), std::sin(theta)), 1.0};
}

} // namespace

TEST_CASE("lens area of disjoint, coincident and unit-offset disks")
{
  CHECK(lens_area(1.0, 1.0, 2.0) == 0.0);
  CHECK(lens_area(1.0, 1.0, 3.5) == 0.0);
  CHECK(lens_area(1.0, 1.0, 0.0) == Approx(kPi).epsilon(1e-15));
  CHECK(std::abs(lens_area(1.0, 1.0, 1.0) - (2.0 * kPi / 3.0 - std::sqrt(3.0) / 2.0)) < 1e-12);
  // Smaller disk inside the larger one.
  CHECK(std::abs(lens_area(2.0, 0.5, 0.3) - kPi * 0.25) < 1e-12);
}

TEST_CASE("lens area of unit disks one apart agrees with sampling")
{
  const double mc = oracle::monte_carlo_lens(1.0, 2'000'000, 7);
  // Hit-or-miss over a box of area 4 with p ≈ 0.31: σ ≈ 4·√(p(1−p)/N) ≈ 1.3e−3.
  CHECK(std::abs(mc - lens_area(1.0, 1.0, 1.0)) < 5e-3);
}

TEST_CASE("lens area is symmetric, non-increasing and continuous in the distance")
{
  SplitMix64 rng(11);
  for (int k = 0; k < 500; ++k) {
    const double r1 = rng.uniform(0.1, 3.0);
    const double r2 = rng.uniform(0.1, 3.0);
    const double d = rng.uniform(0.0, r1 + r2 + 0.5);
    CHECK(lens_area(r1, r2, d) == Approx(lens_area(r2, r1, d)).epsilon(1e-12));
    CHECK(lens_area(r1, r2, d + 1e-3) <= lens_area(r1, r2, d) + 1e-12);
    CHECK(std::abs(lens_area(r1, r2, d + 1e-9) - lens_area(r1, r2, d)) < 1e-6);
    const double cap = kPi * std::min(r1, r2) * std::min(r1, r2);
    CHECK(lens_area(r1, r2, d) >= 0.0);
    CHECK(lens_area(r1, r2, d) <= cap + 1e-12);
  }
}

TEST_CASE("lens area rejects invalid radii and distances")
{
  CHECK_THROWS_AS(lens_area(0.0, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(lens_area(1.0, -1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(lens_area(std::numeric_limits<double>::infinity(), 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(lens_area(1.0, 1.0, std::nan("")), std::invalid_argument);
  CHECK_THROWS_AS(lens_area(1.0, 1.0, -0.5), std::invalid_argument);
}

TEST_CASE("regular hexagon geometry")
{
  const RegularHexagon h{Point(0.5, -1.0), kHexSide};
  CHECK(h.inradius() == Approx(2.0 / std::sqrt(3.0)).epsilon(1e-15));
  const Polygon v = h.vertices();
  REQUIRE(v.size() == 6);
  for (const Point& p : v) {
    CHECK((p - h.center).norm() == Approx(kHexSide).epsilon(1e-14));
  }
  CHECK(signed_polygon_area<double>(v) == Approx(1.5 * std::sqrt(3.0) * kHexSide * kHexSide).epsilon(1e-14));
  CHECK(h.contains(h.center));
  CHECK(h.contains(h.center + Point(h.inradius(), 0.0)));
  CHECK_FALSE(h.contains(h.center + Point(h.inradius() + 1e-6, 0.0)));
  CHECK(h.contains(v[0]));
}

TEST_CASE("disk-polygon clipping examples")
{
  const RegularHexagon h{Point::Zero(), kHexSide};
  CHECK(circle_polygon_intersection_area(Circle{Point::Zero(), 1.0}, h) == Approx(kPi).epsilon(1e-14));
  CHECK(circle_polygon_intersection_area(Circle{Point(10.0, 3.0), 1.0}, h) == 0.0);
  const double at_vertex = circle_polygon_intersection_area(disk_through_center(kPi / 6.0), h);
  CHECK(std::abs(at_vertex - delta_closed_form()) < 1e-9);
  // Polygon entirely inside a big circle.
  const Polygon square{Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)};
  CHECK(circle_polygon_intersection_area(Circle{Point(0.5, 0.5), 5.0}, square) == Approx(1.0).epsilon(1e-14));
}

TEST_CASE("disk-polygon clipping rejects degenerate or misoriented polygons")
{
  const Circle c{Point::Zero(), 1.0};
  CHECK_THROWS_AS(circle_polygon_intersection_area(c, Polygon{Point(0, 0), Point(1, 0)}), std::invalid_argument);
  CHECK_THROWS_AS(circle_polygon_intersection_area(c, Polygon{Point(0, 0), Point(1, 0), Point(2, 0)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(circle_polygon_intersection_area(c, Polygon{Point(0, 0), Point(0, 1), Point(1, 0)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(circle_polygon_intersection_area(Circle{Point::Zero(), 0.0}, Polygon{Point(0, 0), Point(1, 0), Point(0, 1)}),
                  std::invalid_argument);
}

TEST_CASE("disk-polygon clipping matches the boundary-integral oracle")
{
  SplitMix64 rng(3);
  for (int k = 0; k < 2000; ++k) {
    const Point hc(rng.uniform(-1, 1), rng.uniform(-1, 1));
    const double side = rng.uniform(0.3, 2.5);
    const Polygon hex = oracle::hexagon(hc, side);
    const Circle c{Point(rng.uniform(-3, 3), rng.uniform(-3, 3)), rng.uniform(0.2, 2.0)};
    const double area = circle_polygon_intersection_area(c, hex);
    CHECK(std::abs(area - oracle::disk_polygon_area(c, hex)) < 1e-9);
    CHECK(area >= -1e-12);
    CHECK(area <= std::min(kPi * c.radius * c.radius, signed_polygon_area<double>(hex)) + 1e-9);
  }
}

TEST_CASE("disk-hexagon closed form at angle zero matches clipping")
{
  const RegularHexagon h{Point::Zero(), kHexSide};
  const Circle c = disk_through_center(0.0);
  CHECK(std::abs(f_theta(0.0) - circle_polygon_intersection_area(c, h)) < 1e-9);
  CHECK(std::abs(f_theta(0.0) - oracle::disk_polygon_area(c, h.vertices())) < 1e-9);
}

TEST_CASE("disk-hexagon closed form matches clipping at 1000 angles")
{
  const RegularHexagon h{Point::Zero(), kHexSide};
  for (int k = 0; k <= 1000; ++k) {
    const double theta = kPi / 3.0 * k / 1000.0;
    const double oracle_area = oracle::disk_polygon_area(disk_through_center(theta), h.vertices());
    CHECK(std::abs(f_theta(theta) - oracle_area) < 1e-9);
  }
}

TEST_CASE("disk-hexagon closed form is symmetric and bounded below by its minimum")
{
  SplitMix64 rng(5);
  for (int k = 0; k < 500; ++k) {
    const double theta = rng.uniform(0.0, kPi / 3.0);
    CHECK(f_theta(theta) == Approx(f_theta(kPi / 3.0 - theta)).epsilon(1e-12));
    CHECK(f_theta(theta) >= delta_closed_form() - 1e-12);
  }
  CHECK(std::abs(f_theta(kPi / 6.0) - delta_closed_form()) < 1e-12);
  // Both branches agree at the switch point.
  const double b = f_theta_breakpoint();
  CHECK(b == Approx(std::acos(2.0 / 3.0) - kPi / 6.0).epsilon(1e-15));
  CHECK(std::abs(f_theta(b - 1e-12) - f_theta(b)) < 1e-9);
}

TEST_CASE("disk-hexagon closed form has zero slope at the vertex direction")
{
  const double h = 1e-5;
  const double slope = (f_theta(kPi / 6.0 + h) - f_theta(kPi / 6.0 - h)) / (2.0 * h);
  CHECK(std::abs(slope) < 1e-6);
}

TEST_CASE("disk-hexagon closed form rejects angles outside its range")
{
  CHECK_THROWS_AS(f_theta(-1e-3), std::invalid_argument);
  CHECK_THROWS_AS(f_theta(kPi / 3.0 + 1e-3), std::invalid_argument);
  CHECK_THROWS_AS(f_theta(std::nan("")), std::invalid_argument);
}

TEST_CASE("minimum intersection: closed form, minimisation and clipping agree")
{
  CHECK(std::abs(delta_closed_form() - kDelta) < 1e-12);
  const auto [theta, value] = minimize_f_theta();
  CHECK(std::abs(value - delta_closed_form()) < 1e-9);
  CHECK(std::abs(theta - kPi / 6.0) < 1e-4);
  // A dense scan finds nothing lower, so the golden-section search did not stall.
  double scanned = INFINITY;
  for (int k = 0; k <= 20000; ++k) {
    scanned = std::min(scanned, f_theta(kPi / 3.0 * k / 20000.0));
  }
  CHECK(scanned >= value - 1e-12);
}

TEST_CASE("sliding a disk off the hexagon center never drops below the minimum")
{
  const RegularHexagon h{Point::Zero(), kHexSide};
  SplitMix64 rng(17);
  for (int k = 0; k < 1000; ++k) {
    const double r = std::sqrt(rng.uniform()) * (1.0 - 1e-12);
    const double a = rng.uniform(0.0, 2.0 * kPi);
    const Circle c{r * Point(std::cos(a), std::sin(a)), 1.0};
    CHECK(circle_polygon_intersection_area(c, h) >= kDelta - 1e-9);
  }
}

TEST_CASE("geometry templates instantiate for long double")
{
  const CircleT<long double> c{Point2<long double>(0.0L, 0.0L), 1.0L};
  const std::vector<Point2<long double>> sq{{-2.0L, -2.0L}, {2.0L, -2.0L}, {2.0L, 2.0L}, {-2.0L, 2.0L}};
  const long double area = circle_polygon_intersection_area<long double>(c, sq);
  CHECK(static_cast<double>(area) == Approx(kPi).epsilon(1e-15));
  CHECK(static_cast<double>(lens_area<long double>(1.0L, 1.0L, 1.0L)) ==
        Approx(2.0 * kPi / 3.0 - std::sqrt(3.0) / 2.0).epsilon(1e-15));
}
