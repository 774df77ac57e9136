#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diskpack/bounds.hpp"
#include "diskpack/instances.hpp"
#include "diskpack/selector.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>
#include <numbers>

using namespace diskpack;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt3 = std::sqrt(3.0);

// Same-coloured selected disks must have centers at least 2r apart.
void check_disjoint(const DiskSet& d, const Assignment& a)
{
  REQUIRE(a.labels.size() == d.size());
  std::size_t selected = 0;
  for (std::size_t p = 0; p < d.size(); ++p) {
    if (!a.labels[p]) {
      continue;
    }
    ++selected;
    CHECK(*a.labels[p] >= 0);
    CHECK(*a.labels[p] < a.k);
    for (std::size_t q = p + 1; q < d.size(); ++q) {
      if (a.labels[q] && *a.labels[q] == *a.labels[p]) {
        CHECK((d.centers[p] - d.centers[q]).norm() >= 2.0 * d.radius - 1e-9);
      }
    }
  }
  CHECK(selected == a.selected_count);
}

void check_report(const DiskSet& d, const Solution& s)
{
  const CoverageReport r = verify(d, s.assignment);
  CHECK(r.union_area == Approx(s.report.union_area).epsilon(1e-12));
  CHECK(r.selected_area == Approx(s.report.selected_area).epsilon(1e-12));
  CHECK(s.report.ratio >= 0.0);
  CHECK(s.report.ratio <= 1.0);
  // The per-cell accounting is a lower bound on the selected area.
  CHECK(s.report.hexagon_accounting <= s.report.selected_area + 1e-9);
}

DiskSet fig6_instance()
{
  DiskSet d;
  d.centers = {Point(0, 0), Point(2.0 / kSqrt3, 0), Point(4.0 / kSqrt3, 0)};
  return d;
}

const std::vector<corpus::Instance>& small_corpus()
{
  static const std::vector<corpus::Instance> c = corpus::build(40, 8, 12, 80, 555);
  return c;
}

} // namespace

TEST_CASE("a single disk is always selected in full")
{
  DiskSet d;
  d.centers.push_back(Point(3.7, -1.2));
  const std::vector<std::function<Solution()>> solvers = {
    [&] { return solve_basic_3colour(d); },   [&] { return solve_weighted_3colour(d, {8, true, true}); },
    [&] { return solve_rado_1colour(d); },    [&] { return solve_square_2colour(d); },
    [&] { return solve_kcolour(d, 3); },      [&] { return solve_kcolour(d, 7); },
    [&] { return solve_kcolour(d, 1); },
  };
  for (const auto& solve : solvers) {
    const Solution s = solve();
    CHECK(s.assignment.selected_count == 1);
    CHECK(s.report.ratio == Approx(1.0).epsilon(1e-12));
    check_disjoint(d, s.assignment);
  }
  // A lattice point can sit at the disk center, whose hexagon holds it whole.
  CHECK(solve_weighted_3colour(d, {8, true, true}).report.hexagon_accounting == Approx(kPi).epsilon(1e-12));
}

TEST_CASE("empty instances give empty assignments")
{
  const DiskSet d;
  for (const Solution& s : {solve_basic_3colour(d), solve_weighted_3colour(d), solve_rado_1colour(d),
                            solve_square_2colour(d), solve_kcolour(d, 4)}) {
    CHECK(s.assignment.labels.empty());
    CHECK(s.assignment.selected_count == 0);
    CHECK(s.report.ratio == 0.0);
  }
}

TEST_CASE("ring of nearly concurrent disks")
{
  const DiskSet d = gen_spirograph(100, 0.01);
  const Solution basic = solve_basic_3colour(d);
  CHECK(basic.report.ratio >= 0.3604);
  CHECK(basic.report.ratio <= 0.7075);
  check_disjoint(d, basic.assignment);

  const Solution rado = solve_rado_1colour(d);
  CHECK(rado.assignment.selected_count == 1);
  CHECK(rado.report.ratio >= kPi / (8 * kSqrt3) - 1e-9);
  CHECK(rado.report.ratio <= 0.26);
}

TEST_CASE("three overlapping disks: positioning trade-off")
{
  const DiskSet d = fig6_instance();
  const double three_delta = 3.0 * delta_closed_form();
  CHECK(three_delta == Approx(4.99).epsilon(1e-3));

  const Solution basic = solve_basic_3colour(d);
  CHECK(basic.report.selected_area >= three_delta - 1e-9);
  check_disjoint(d, basic.assignment);

  const Solution weighted = solve_weighted_3colour(d);
  CHECK(std::abs(weighted.report.selected_area - 2.0 * kPi) < 1e-9);
  CHECK(weighted.assignment.selected_count == 2);
  CHECK(weighted.assignment.labels[0].has_value());
  CHECK_FALSE(weighted.assignment.labels[1].has_value());
  CHECK(weighted.assignment.labels[2].has_value());
  CHECK(lattice_weight(d, weighted.assignment.lattice) >= lattice_weight(d, basic.assignment.lattice) - 1e-12);
  CHECK(lattice_weight(d, weighted.assignment.lattice) > three_delta);
}

TEST_CASE("disks at distance one toward hexagon vertices attain the minimum")
{
  const LatticeUsed lattice{Colouring::tri3, 4.0 / kSqrt3, Point::Zero(), 3};
  const TriLattice tri{lattice.side, lattice.offset};
  DiskSet d;
  const Point toward_vertex(std::cos(kPi / 6), std::sin(kPi / 6));
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      d.centers.push_back(tri.point({i, j}) + toward_vertex);
    }
  }
  const double per_disk = lattice_weight(d, lattice) / static_cast<double>(d.size());
  CHECK(std::abs(per_disk - delta_closed_form()) < 1e-6);
}

TEST_CASE("verification")
{
  DiskSet d;
  d.centers = {Point(0, 0), Point(1.5, 0), Point(5, 0)};
  Assignment a;
  a.k = 3;
  a.labels = {0, 0, 1};
  a.selected_count = 3;
  try {
    verify(d, a);
    FAIL("overlap not detected");
  } catch (const VerificationError& e) {
    CHECK(e.first() == 0);
    CHECK(e.second() == 1);
    CHECK(std::string(e.what()).find("disks 0 and 1") != std::string::npos);
  }

  a.labels = {std::nullopt, std::nullopt, std::nullopt};
  const CoverageReport none = verify(d, a);
  CHECK(none.selected_area == 0.0);
  CHECK(none.ratio == 0.0);

  a.labels = {0, 1};
  CHECK_THROWS_AS(verify(d, a), std::invalid_argument);
  a.labels = {0, 3, std::nullopt};
  CHECK_THROWS_AS(verify(d, a), std::invalid_argument);

  // Tangent same-coloured disks are allowed.
  d.centers = {Point(0, 0), Point(2, 0)};
  a.labels = {0, 0};
  CHECK(verify(d, a).selected_area == Approx(2 * kPi).epsilon(1e-12));

  const Solution s = solve_basic_3colour(gen_random(50, 8.0, 4));
  CHECK_NOTHROW(verify(gen_random(50, 8.0, 4), s.assignment));
}

TEST_CASE("k-colour solver")
{
  CHECK_THROWS_AS(solve_kcolour(gen_random(5, 5.0, 1), 5), std::invalid_argument);
  CHECK_THROWS_AS(solve_kcolour(gen_random(5, 5.0, 1), 0), std::invalid_argument);
  try {
    solve_kcolour(gen_random(5, 5.0, 1), 2);
    FAIL("k = 2 accepted");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("Loeschian") != std::string::npos);
  }
  for (int k : {1, 3, 4, 7, 12, 13}) {
    CAPTURE(k);
    for (const auto& inst : small_corpus()) {
      const Solution s = solve_kcolour(inst.disks, k);
      check_disjoint(inst.disks, s.assignment);
      CHECK(s.report.ratio >= 1.0 / std::pow(1.0 + delta_k(k), 2) - 1e-9);
      if (k > 1) {
        CHECK(s.report.ratio >= kcolour_guarantee(k) - 1e-9);
      }
    }
  }
}

TEST_CASE("every solver: disjointness, reports and guarantees on a corpus")
{
  const double c3 = kSqrt3 / 8.0 * delta_closed_form();
  const double c1 = kPi / (8.0 * kSqrt3);
  const double c2 = square_delta() / 8.0;
  for (const auto& inst : small_corpus()) {
    CAPTURE(inst.name);
    const DiskSet& d = inst.disks;
    const double area = exact_union_area(d);

    const Solution basic = solve_basic_3colour(d);
    check_disjoint(d, basic.assignment);
    check_report(d, basic);
    CHECK(basic.report.ratio >= c3 - 1e-9);
    CHECK(basic.report.lattice_points_hit >= static_cast<int>(std::ceil(area * kSqrt3 / 8.0 - 1e-9)));
    CHECK(basic.report.hexagon_accounting >= basic.report.lattice_points_hit * delta_closed_form() - 1e-9);

    const Solution rado = solve_rado_1colour(d);
    check_disjoint(d, rado.assignment);
    check_report(d, rado);
    CHECK(rado.report.ratio >= c1 - 1e-9);
    CHECK(rado.report.lattice_points_hit >= static_cast<int>(std::ceil(area / (8.0 * kSqrt3) - 1e-9)));

    const Solution square = solve_square_2colour(d);
    check_disjoint(d, square.assignment);
    check_report(d, square);
    CHECK(square.report.ratio >= c2 - 1e-9);
  }
}

TEST_CASE("weighted solver dominates the basic solver in lattice weight")
{
  int ratio_not_lower = 0;
  int count = 0;
  for (const auto& inst : small_corpus()) {
    if (inst.disks.size() > 60) {
      continue;
    }
    CAPTURE(inst.name);
    const Solution basic = solve_basic_3colour(inst.disks);
    const Solution weighted = solve_weighted_3colour(inst.disks, {12, true, true});
    check_disjoint(inst.disks, weighted.assignment);
    const double wb = lattice_weight(inst.disks, basic.assignment.lattice);
    const double ww = lattice_weight(inst.disks, weighted.assignment.lattice);
    CHECK(ww >= wb - 1e-9);
    CHECK(weighted.report.hexagon_accounting == Approx(ww).epsilon(1e-12));
    CHECK(weighted.report.ratio >= kSqrt3 / 8.0 * delta_closed_form() - 1e-9);
    ratio_not_lower += weighted.report.ratio >= basic.report.ratio - 1e-9 ? 1 : 0;
    ++count;
  }
  MESSAGE("weighted ratio >= basic ratio on " << ratio_not_lower << " of " << count << " instances");
  CHECK(count > 20);
}

TEST_CASE("weighted solver rejects a degenerate sampling grid")
{
  CHECK_THROWS_AS(solve_weighted_3colour(gen_random(3, 3.0, 1), {0, true, true}), std::invalid_argument);
}

TEST_CASE("weighted solver output does not depend on the thread count")
{
  const DiskSet d = gen_random(40, 7.0, 12);
  setenv("DISKPACK_THREADS", "1", 1);
  const Solution one = solve_weighted_3colour(d, {16, true, true});
  setenv("DISKPACK_THREADS", "3", 1);
  CHECK(worker_threads() == 3);
  const Solution three = solve_weighted_3colour(d, {16, true, true});
  unsetenv("DISKPACK_THREADS");
  CHECK(one.assignment.labels == three.assignment.labels);
  CHECK(one.assignment.lattice.offset == three.assignment.lattice.offset);
}

TEST_CASE("two far-apart clusters keep the one-colour guarantee")
{
  DiskSet a = gen_clustered(40, 1, 1.5, 1.0, 3);
  const DiskSet b = gen_clustered(40, 1, 1.5, 1.0, 4);
  for (const Point& c : b.centers) {
    a.centers.push_back(c + Point(100.0, 37.0));
  }
  const Solution s = solve_rado_1colour(a);
  check_disjoint(a, s.assignment);
  CHECK(s.report.ratio >= kPi / (8.0 * kSqrt3) - 1e-9);
}

TEST_CASE("colouring names round-trip")
{
  for (Colouring c : {Colouring::single, Colouring::tri3, Colouring::checkerboard, Colouring::loeschian}) {
    CHECK(colouring_from_string(to_string(c)) == c);
  }
  CHECK_THROWS_AS(colouring_from_string("hexagonal"), std::invalid_argument);
}
