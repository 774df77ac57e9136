// Circle arrangements over a lattice's fundamental cell.
//
// Disks are copied into the fundamental cell once per cell translate they
// meet. A point q of the cell then has "distinct-translate depth" c(q): the
// number of translates whose disks cover q, which is exactly the number of
// lattice points in the union when the lattice is shifted to pass through q.
#pragma once

#include "diskpack/geom_core.hpp"
#include "diskpack/lattice.hpp"

#include <map>
#include <span>
#include <vector>

namespace diskpack {

struct DiskSet;

struct TranslatedCircle
{
  Circle circle;
  /// Cell translate the copy came from: circle = source − (i·u + j·v).
  LatticeIndex translate;
  std::size_t source_disk = 0;
};

struct DepthWitness
{
  Point point;
  int distinct_translates = 0;
  std::map<LatticeIndex, int> per_translate_counts;
};

/// One copy of each disk per cell translate whose closed cell it meets.
std::vector<TranslatedCircle> translate_to_cell(const DiskSet& disks, const LatticeFrame& frame);
std::vector<TranslatedCircle> translate_to_cell(const DiskSet& disks, const TriLattice& lattice);

/// Point of the fundamental cell maximising the distinct-translate depth.
/// Candidates are all pairwise boundary crossings inside the closed cell plus
/// the centers of circles that cross no other circle; the winner (ties: the
/// lexicographically smallest point) is recounted against every copy with
/// closed-disk membership. Throws on empty input.
DepthWitness max_distinct_translate_depth(std::span<const TranslatedCircle> circles, const LatticeFrame& frame);

/// Every candidate vertex that attains the maximum distinct-translate depth,
/// in lexicographic order.
std::vector<Point> max_depth_candidates(std::span<const TranslatedCircle> circles, const LatticeFrame& frame);

struct DepthPoint
{
  Point point;
  int depth = 0;
};

/// Point covered by the largest number of (closed) disks. Throws on empty
/// input.
DepthPoint max_depth(std::span<const Circle> circles);

/// Closed-disk depth of a point.
int depth_at(std::span<const Circle> circles, const Point& p, double eps = kGeomEps);

/// Recount of the distinct-translate depth at a point.
DepthWitness distinct_depth_at(std::span<const TranslatedCircle> circles, const Point& p,
                               double eps = kGeomEps);

} // namespace diskpack
