// Areas of unions of equal disks.
#pragma once

#include "diskpack/geom_core.hpp"

#include <cstdint>
#include <vector>

namespace diskpack {

/// A set of equal disks given by their centers. Duplicates are allowed.
struct DiskSet
{
  double radius = 1.0;
  std::vector<Point> centers;

  std::size_t size() const { return centers.size(); }
  bool empty() const { return centers.empty(); }
  Circle circle(std::size_t k) const { return {centers[k], radius}; }
  std::vector<Circle> circles() const;
  /// Throws std::invalid_argument on a non-positive radius or non-finite center.
  void validate() const;
};

/// Exact area of the union, from the boundary arcs that no other disk covers
/// (Green's theorem). Empty set → 0.
double exact_union_area(const DiskSet& disks);

/// Same, for circles of arbitrary radii.
double exact_union_area(const std::vector<Circle>& circles);

struct MonteCarloEstimate
{
  double area = 0.0;
  double standard_error = 0.0;
  std::uint64_t samples = 0;
};

/// Hit-or-miss estimate over the bounding box of the disks; deterministic for
/// a given seed (SplitMix64 stream).
MonteCarloEstimate monte_carlo_union_area(const DiskSet& disks, std::uint64_t samples, std::uint64_t seed);

/// Union area after scaling every radius by r ∈ [0, 1] about its center.
double scaled_union_area(const DiskSet& disks, double r);

} // namespace diskpack
