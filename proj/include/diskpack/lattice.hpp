// Positioned triangular and square lattices, their colourings, fundamental
// cells and Voronoi cells.
#pragma once

#include "diskpack/geom_core.hpp"

#include <Eigen/Core>

#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace diskpack {

/// Integer lattice coordinates (i, j): position = offset + i·u + j·v.
struct LatticeIndex
{
  int i = 0;
  int j = 0;

  auto operator<=>(const LatticeIndex&) const = default;
};

/// Translation frame shared by every lattice: origin plus basis (u, v). The
/// fundamental cell is the half-open parallelogram {origin + s·u + t·v :
/// s, t ∈ [0, 1)}.
struct LatticeFrame
{
  Point origin = Point::Zero();
  Point u = Point(1.0, 0.0);
  Point v = Point(0.0, 1.0);

  Point point(LatticeIndex idx) const { return origin + idx.i * u + idx.j * v; }
  /// Real coordinates (s, t) with p = origin + s·u + t·v.
  Point coords(const Point& p) const;
  double cell_area() const { return std::abs(cross<double>(u, v)); }
  /// Cell vertices, counterclockwise.
  Polygon cell_polygon(LatticeIndex idx = {}) const;
  /// Distance between a point and the closed cell translated by idx.
  double distance_to_cell(const Point& p, LatticeIndex idx) const;
  /// Whether p lies in the closed fundamental cell (within eps).
  bool in_closed_cell(const Point& p, double eps = kGeomEps) const;
};

struct CellPoint
{
  Point cell_point;
  LatticeIndex translate;
};

/// Reduces p into the fundamental cell of the frame; p = cell_point + i·u + j·v.
CellPoint wrap_to_cell(const Point& p, const LatticeFrame& frame);

struct LatticePoint
{
  LatticeIndex index;
  Point position;
  int colour = 0;
};

/// Axis-aligned box [min, max].
struct BoundingBox
{
  Point min;
  Point max;
};

/// Triangular lattice with basis u = (side, 0), v = (side/2, side·√3/2),
/// 3-coloured by (i − j) mod 3.
struct TriLattice
{
  double side = 4.0 / std::numbers::sqrt3;
  Point offset = Point::Zero();

  Point u() const { return {side, 0.0}; }
  Point v() const { return {side / 2.0, side * std::numbers::sqrt3 / 2.0}; }
  LatticeFrame frame() const { return {offset, u(), v()}; }
  Point point(LatticeIndex idx) const { return frame().point(idx); }
  int colour(LatticeIndex idx) const;
  /// Area α of one lattice triangle.
  double triangle_area() const { return std::numbers::sqrt3 / 4.0 * side * side; }
};

/// Square lattice with basis u = (side, 0), v = (0, side), checkerboard
/// 2-colouring (i + j) mod 2.
struct SquareLattice
{
  double side = 2.0 * std::numbers::sqrt2;
  Point offset = Point::Zero();

  LatticeFrame frame() const { return {offset, {side, 0.0}, {0.0, side}}; }
  Point point(LatticeIndex idx) const { return frame().point(idx); }
  int colour(LatticeIndex idx) const;
  /// Voronoi cell of a lattice point: axis-aligned square, counterclockwise.
  Polygon voronoi_cell(LatticeIndex idx) const;
};

/// Colouring of the triangular lattice by residue classes modulo the
/// sublattice generated by (a, b) and its 60° rotation (−b, a + b), where
/// k = a² + ab + b².
class LoeschianColouring
{
public:
  explicit LoeschianColouring(int k);

  int k() const { return k_; }
  std::pair<int, int> generators() const { return {a_, b_}; }
  int colour(LatticeIndex idx) const;

private:
  int k_;
  int a_;
  int b_;
  // Lower-triangular basis (h11, h21), (0, h22) of the sublattice.
  std::int64_t h11_;
  std::int64_t h21_;
  std::int64_t h22_;
};

/// The pair (a, b), a, b ≥ 0, with a² + ab + b² = k and the smallest a (then
/// b); nullopt when k is not Löschian. Throws on k ≤ 0.
std::optional<std::pair<int, int>> loeschian_decompose(int k);

std::vector<LatticePoint> points_in_box(const TriLattice& lattice, const BoundingBox& box);
std::vector<LatticePoint> points_in_box(const SquareLattice& lattice, const BoundingBox& box);

CellPoint wrap_to_cell(const Point& p, const TriLattice& lattice);

/// Voronoi cell of a lattice point: regular hexagon of side side/√3.
RegularHexagon voronoi_cell(const Point& lattice_point, const TriLattice& lattice);

/// Lattice point whose Voronoi cell contains p; ties broken by the
/// lexicographically smallest (i, j).
LatticeIndex nearest_lattice_point(const Point& p, const LatticeFrame& frame);

/// Lattice points (closed-disk membership within eps) inside a circle.
std::vector<LatticeIndex> lattice_points_in_circle(const Circle& c, const LatticeFrame& frame,
                                                   double eps = kGeomEps);

/// Integer floor division and non-negative modulus.
inline std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) {
    --q;
  }
  return q;
}

inline std::int64_t positive_mod(std::int64_t a, std::int64_t b)
{
  return a - floor_div(a, b) * b;
}

} // namespace diskpack
