#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diskpack/instances.hpp"
#include "diskpack/union_area.hpp"
#include "support/oracles.hpp"

#include <cmath>
#include <numbers>

using namespace diskpack;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

DiskSet disks(std::initializer_list<Point> centers, double radius = 1.0)
{
  DiskSet d;
  d.radius = radius;
  d.centers.assign(centers.begin(), centers.end());
  return d;
}

} // namespace

TEST_CASE("union area examples")
{
  CHECK(exact_union_area(DiskSet{}) == 0.0);
  CHECK(exact_union_area(disks({Point(3, 4)})) == Approx(kPi).epsilon(1e-14));
  CHECK(exact_union_area(disks({Point(0, 0), Point(4, 0)})) == Approx(2 * kPi).epsilon(1e-14));
  const double two = 2 * kPi - (2 * kPi / 3 - std::sqrt(3.0) / 2);
  CHECK(std::abs(exact_union_area(disks({Point(0, 0), Point(1, 0)})) - two) < 1e-9);
  CHECK(std::abs(two - 5.05481561) < 1e-8);
  // Tangent disks: no overlap.
  CHECK(exact_union_area(disks({Point(0, 0), Point(2, 0)})) == Approx(2 * kPi).epsilon(1e-12));
  // Duplicates and containment.
  CHECK(exact_union_area(disks({Point(1, 1), Point(1, 1), Point(1, 1)})) == Approx(kPi).epsilon(1e-14));
  const std::vector<Circle> nested{{Point(0, 0), 2.0}, {Point(0.5, 0.2), 1.0}};
  CHECK(exact_union_area(nested) == Approx(4 * kPi).epsilon(1e-14));
  // Scale invariance of the radius.
  CHECK(exact_union_area(disks({Point(0, 0), Point(2, 0)}, 2.0)) ==
        Approx(4.0 * exact_union_area(disks({Point(0, 0), Point(1, 0)}))).epsilon(1e-12));
}

TEST_CASE("two-disk union matches the lens closed form")
{
  for (double d = 0.0; d <= 2.5; d += 0.01) {
    const double expected = 2 * kPi - oracle::lens_closed_form(d);
    CHECK(std::abs(exact_union_area(disks({Point(0, 0), Point(d * 0.6, d * 0.8)})) - expected) < 1e-9);
  }
}

TEST_CASE("three mutually overlapping disks by inclusion-exclusion")
{
  // Centers on an equilateral triangle of side s > √3 have no common point,
  // so inclusion-exclusion stops at pairs.
  for (double s : {1.75, 1.8, 1.9, 1.99}) {
    const DiskSet d = disks({Point(0, 0), Point(s, 0), Point(s / 2, s * std::sqrt(3.0) / 2)});
    CHECK(std::abs(exact_union_area(d) - (3 * kPi - 3 * oracle::lens_closed_form(s))) < 1e-9);
  }
}

TEST_CASE("union area is monotone and bounded by the disk count")
{
  SplitMix64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const DiskSet d = gen_random(40, rng.uniform(1.0, 15.0), rng());
    DiskSet partial;
    double prev = 0.0;
    for (const Point& c : d.centers) {
      partial.centers.push_back(c);
      const double a = exact_union_area(partial);
      CHECK(a >= prev - 1e-9);
      CHECK(a <= partial.size() * kPi + 1e-9);
      prev = a;
    }
  }
}

TEST_CASE("Monte Carlo estimate of a single disk")
{
  const MonteCarloEstimate mc = monte_carlo_union_area(disks({Point(0, 0)}), 10'000'000, 1);
  CHECK(std::abs(mc.area - kPi) < 0.01);
  CHECK(mc.samples == 10'000'000);
  CHECK(mc.standard_error > 0.0);
}

TEST_CASE("Monte Carlo estimate is seed-stable and agrees with the exact area")
{
  SplitMix64 rng(44);
  for (int trial = 0; trial < 10; ++trial) {
    const DiskSet d = gen_random(1 + static_cast<int>(rng() % 60), rng.uniform(1.0, 12.0), rng());
    const MonteCarloEstimate a = monte_carlo_union_area(d, 400'000, 99);
    const MonteCarloEstimate b = monte_carlo_union_area(d, 400'000, 99);
    CHECK(a.area == b.area);
    CHECK(std::abs(a.area - exact_union_area(d)) <= 4.0 * a.standard_error);
  }
  CHECK(monte_carlo_union_area(DiskSet{}, 100, 1).area == 0.0);
  CHECK_THROWS_AS(monte_carlo_union_area(disks({Point(0, 0)}), 0, 1), std::invalid_argument);
}

TEST_CASE("scaled union area")
{
  const DiskSet d = gen_random(30, 6.0, 3);
  const double a = exact_union_area(d);
  CHECK(scaled_union_area(d, 1.0) == Approx(a).epsilon(1e-14));
  CHECK(scaled_union_area(d, 0.0) == 0.0);
  CHECK(scaled_union_area(d, 0.5) >= 0.25 * a - 1e-9);
  CHECK_THROWS_AS(scaled_union_area(d, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(scaled_union_area(d, 1.1), std::invalid_argument);
}

TEST_CASE("scaling the radii by r keeps at least r squared of the area")
{
  SplitMix64 rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    const DiskSet d = gen_random(1 + static_cast<int>(rng() % 100), rng.uniform(0.5, 20.0), rng());
    const double a = exact_union_area(d);
    for (int k = 1; k <= 9; ++k) {
      const double r = k / 10.0;
      CHECK(scaled_union_area(d, r) >= r * r * a - 1e-9);
    }
  }
}

TEST_CASE("invalid disk sets are rejected")
{
  CHECK_THROWS_AS(exact_union_area(disks({Point(0, 0)}, 0.0)), std::invalid_argument);
  CHECK_THROWS_AS(exact_union_area(disks({Point(NAN, 0)})), std::invalid_argument);
}
