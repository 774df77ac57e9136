#include "diskpack/instances.hpp"

#include "diskpack/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace diskpack {

DiskSet gen_spirograph(int n, double epsilon, std::uint64_t seed)
{
  if (n < 3) {
    throw std::invalid_argument("gen_spirograph: n must be at least 3");
  }
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("gen_spirograph: epsilon must lie in (0, 1)");
  }
  double phase = 0.0;
  if (seed != 0) {
    SplitMix64 rng(seed);
    phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
  }
  DiskSet out;
  const double ring = 1.0 - epsilon;
  for (int k = 0; k < n; ++k) {
    const double a = phase + 2.0 * std::numbers::pi * k / n;
    out.centers.emplace_back(ring * std::cos(a), ring * std::sin(a));
  }
  return out;
}

DiskSet gen_random(int n, double box_side, std::uint64_t seed)
{
  if (n < 1) {
    throw std::invalid_argument("gen_random: n must be at least 1");
  }
  if (!(std::isfinite(box_side) && box_side > 0.0)) {
    throw std::invalid_argument("gen_random: box side must be positive");
  }
  SplitMix64 rng(seed);
  DiskSet out;
  out.centers.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double x = rng.uniform(0.0, box_side);
    const double y = rng.uniform(0.0, box_side);
    out.centers.emplace_back(x, y);
  }
  return out;
}

DiskSet gen_clustered(int n, int clusters, double spread, double box_side, std::uint64_t seed)
{
  if (n < 1 || clusters < 1) {
    throw std::invalid_argument("gen_clustered: n and clusters must be at least 1");
  }
  if (!(spread >= 0.0) || !(box_side > 0.0)) {
    throw std::invalid_argument("gen_clustered: spread must be non-negative and box side positive");
  }
  SplitMix64 rng(seed);
  std::vector<Point> hubs;
  for (int c = 0; c < clusters; ++c) {
    const double x = rng.uniform(0.0, box_side);
    const double y = rng.uniform(0.0, box_side);
    hubs.emplace_back(x, y);
  }
  DiskSet out;
  for (int k = 0; k < n; ++k) {
    const Point& hub = hubs[static_cast<std::size_t>(k % clusters)];
    const double a = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const double r = spread * std::sqrt(rng.uniform());
    out.centers.emplace_back(hub.x() + r * std::cos(a), hub.y() + r * std::sin(a));
  }
  return out;
}

DepthReduction gen_depth_reduction(const DiskSet& disks)
{
  disks.validate();
  DepthReduction out;
  out.disks.radius = disks.radius;
  if (disks.empty()) {
    return out;
  }
  // Bounding rectangle with a margin, then the smallest upward equilateral
  // triangle on the rectangle's bottom edge that contains it.
  const double margin = 0.5 * disks.radius;
  Point lo = disks.centers.front();
  Point hi = lo;
  for (const Point& c : disks.centers) {
    lo = lo.cwiseMin(c);
    hi = hi.cwiseMax(c);
  }
  lo.array() -= disks.radius + margin;
  hi.array() += disks.radius + margin;
  const double width = hi.x() - lo.x();
  const double height = hi.y() - lo.y();
  const double slant = height / std::numbers::sqrt3;
  const double side = width + 2.0 * slant;
  out.lattice = TriLattice{side, Point(lo.x() - slant, lo.y())};

  const auto per_row = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(disks.size()))));
  for (std::size_t k = 0; k < disks.size(); ++k) {
    const LatticeIndex idx{static_cast<int>(k) % per_row, static_cast<int>(k) / per_row};
    out.disks.centers.push_back(disks.centers[k] + idx.i * out.lattice.u() + idx.j * out.lattice.v());
  }
  return out;
}

} // namespace diskpack
