// Seeded instance generators.
#pragma once

#include "diskpack/lattice.hpp"
#include "diskpack/union_area.hpp"

#include <cstdint>

namespace diskpack {

/// n unit disks with centers equally spaced on the circle of radius 1 − ε
/// about the origin, so every disk contains the origin. seed 0 starts at
/// angle 0; any other seed draws a random starting phase.
DiskSet gen_spirograph(int n, double epsilon, std::uint64_t seed = 0);

/// n unit disks with centers uniform in [0, box_side]².
DiskSet gen_random(int n, double box_side, std::uint64_t seed);

/// n unit disks split among `clusters` centers (uniform in the box), each
/// disk offset from its cluster center uniformly within radius `spread`.
DiskSet gen_clustered(int n, int clusters, double spread, double box_side, std::uint64_t seed);

struct DepthReduction
{
  DiskSet disks;
  TriLattice lattice;
};

/// Puts an equilateral triangle T around the disks, expands T to a lattice
/// of the same side, and moves disk i into the i-th upward cell. The lattice
/// can then be positioned to hit the moved disks in k points exactly when
/// some point of the plane lies in k original disks.
DepthReduction gen_depth_reduction(const DiskSet& disks);

} // namespace diskpack
