// Lattice-based selection and colouring of disks.
//
// Every solver positions a lattice, picks at most one disk per lattice point
// and gives it the point's colour. Lattice spacing guarantees that disks of
// the same colour never overlap.
#pragma once

#include "diskpack/geom_core.hpp"
#include "diskpack/lattice.hpp"
#include "diskpack/union_area.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace diskpack {

enum class Colouring
{
  single,       // triangular lattice, one colour
  tri3,         // triangular lattice, (i − j) mod 3
  checkerboard, // square lattice, (i + j) mod 2
  loeschian,    // triangular lattice, residues modulo a Löschian sublattice
};

const char* to_string(Colouring c);
Colouring colouring_from_string(const std::string& s);

/// A positioned, coloured lattice.
struct LatticeUsed
{
  Colouring colouring = Colouring::tri3;
  double side = 4.0 / std::numbers::sqrt3;
  Point offset = Point::Zero();
  int k = 3;

  bool is_square() const { return colouring == Colouring::checkerboard; }
  LatticeFrame frame() const;
  int colour(LatticeIndex idx) const;
  /// Voronoi cell of a lattice point, counterclockwise.
  Polygon voronoi_cell(LatticeIndex idx) const;
};

struct Assignment
{
  /// Colour in [0, k) per disk; nullopt when the disk is not selected.
  std::vector<std::optional<int>> labels;
  int k = 3;
  LatticeUsed lattice;
  std::size_t selected_count = 0;
  std::string solver;
  /// Coverage fraction the solver guarantees.
  double guarantee = 0.0;
};

struct CoverageReport
{
  double union_area = 0.0;    // A
  double selected_area = 0.0; // A_C
  double ratio = 0.0;         // A_C / A
  double guarantee = 0.0;
  int lattice_points_hit = 0;
  /// Σ area(d ∩ Voronoi cell of the point that selected d); a lower bound on
  /// A_C and, for the 3-colour solvers, the lattice weight W(L).
  double hexagon_accounting = 0.0;
};

struct Solution
{
  Assignment assignment;
  CoverageReport report;
};

/// Candidate lattice offsets for the weighted solver.
struct OffsetSampling
{
  /// grid × grid cell-centered samples of the fundamental cell.
  int grid = 256;
  /// Arrangement vertices attaining the maximum distinct-translate depth.
  bool arrangement_vertices = true;
  /// Offsets putting a lattice point at a disk center.
  bool disk_centers = true;
};

class VerificationError : public std::runtime_error
{
public:
  VerificationError(std::size_t first, std::size_t second, const std::string& what)
    : std::runtime_error(what), first_(first), second_(second)
  {}

  std::size_t first() const { return first_; }
  std::size_t second() const { return second_; }

private:
  std::size_t first_;
  std::size_t second_;
};

/// 3 colours, lattice side 4√3/3 positioned to hit the most points of the
/// union; each point takes the containing disk with the largest Voronoi-cell
/// intersection. Guarantee √3·Δ/8.
Solution solve_basic_3colour(const DiskSet& disks);

/// 3 colours, lattice positioned to maximise the lattice weight W(L) over
/// the sampled offsets. The basic solver's offset is always a candidate.
Solution solve_weighted_3colour(const DiskSet& disks, const OffsetSampling& sampling = {});

/// One colour, lattice side 4: selected disks are pairwise disjoint.
/// Guarantee π/(8√3).
Solution solve_rado_1colour(const DiskSet& disks);

/// 2 colours on the checkerboard square lattice of side 2√2. Guarantee Δ₂/8.
Solution solve_square_2colour(const DiskSet& disks);

/// k colours for Löschian k: triangular lattice of side α_k, one disk per
/// Voronoi cell (the disk whose center is nearest the lattice point). Guarantee
/// 1/(1 + δ_k)². For k = 1 the construction degenerates (α₁ < 0) and the Rado
/// solver is used instead. Throws std::invalid_argument for non-Löschian k.
Solution solve_kcolour(const DiskSet& disks, int k);

/// Lattice weight W(L): over lattice points in the union, the largest
/// area(d ∩ Voronoi cell) among disks d containing the point, summed.
double lattice_weight(const DiskSet& disks, const LatticeUsed& lattice);

/// Recomputes the coverage of an assignment. Throws VerificationError naming
/// the first pair of overlapping same-coloured disks, std::invalid_argument on
/// malformed labels.
CoverageReport verify(const DiskSet& disks, const Assignment& assignment);

/// Thread count for parallel candidate evaluation: DISKPACK_THREADS when set,
/// otherwise the hardware concurrency.
unsigned worker_threads();

} // namespace diskpack
