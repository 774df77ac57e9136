#include "diskpack/lattice.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace diskpack {

namespace {

// Coordinates within this distance of an integer are snapped to it so that
// p = origin + u + v lands on the cell corner instead of just below it.
constexpr double kSnap = 1e-12;

double snap(double s)
{
  const double r = std::round(s);
  return std::abs(s - r) <= kSnap ? r : s;
}

double distance_to_segment(const Point& p, const Point& a, const Point& b)
{
  const Point ab = b - a;
  const double t = std::clamp((p - a).dot(ab) / ab.squaredNorm(), 0.0, 1.0);
  return (p - (a + t * ab)).norm();
}

template <typename Lattice>
std::vector<LatticePoint> points_in_box_impl(const Lattice& lattice, const BoundingBox& box)
{
  if (!is_finite(box.min) || !is_finite(box.max)) {
    throw std::invalid_argument("points_in_box: bounding box must be finite");
  }
  const LatticeFrame frame = lattice.frame();
  const Point corners[4] = {box.min, {box.max.x(), box.min.y()}, box.max, {box.min.x(), box.max.y()}};
  double smin = INFINITY, smax = -INFINITY, tmin = INFINITY, tmax = -INFINITY;
  for (const Point& c : corners) {
    const Point st = frame.coords(c);
    smin = std::min(smin, st.x());
    smax = std::max(smax, st.x());
    tmin = std::min(tmin, st.y());
    tmax = std::max(tmax, st.y());
  }
  std::vector<LatticePoint> out;
  for (int j = static_cast<int>(std::floor(tmin)) - 1; j <= static_cast<int>(std::ceil(tmax)) + 1; ++j) {
    for (int i = static_cast<int>(std::floor(smin)) - 1; i <= static_cast<int>(std::ceil(smax)) + 1; ++i) {
      const LatticeIndex idx{i, j};
      const Point p = frame.point(idx);
      if (p.x() >= box.min.x() && p.x() <= box.max.x() && p.y() >= box.min.y() && p.y() <= box.max.y()) {
        out.push_back({idx, p, lattice.colour(idx)});
      }
    }
  }
  return out;
}

} // namespace

Point LatticeFrame::coords(const Point& p) const
{
  Eigen::Matrix2d basis;
  basis.col(0) = u;
  basis.col(1) = v;
  return basis.inverse() * (p - origin);
}

Polygon LatticeFrame::cell_polygon(LatticeIndex idx) const
{
  const Point o = point(idx);
  Polygon poly{o, o + u, o + u + v, o + v};
  if (signed_polygon_area<double>(std::span<const Point>(poly)) < 0) {
    std::swap(poly[1], poly[3]);
  }
  return poly;
}

double LatticeFrame::distance_to_cell(const Point& p, LatticeIndex idx) const
{
  const Point st = coords(p) - Point(idx.i, idx.j);
  if (st.x() >= 0.0 && st.x() <= 1.0 && st.y() >= 0.0 && st.y() <= 1.0) {
    return 0.0;
  }
  const Polygon poly = cell_polygon(idx);
  double best = INFINITY;
  for (std::size_t k = 0; k < poly.size(); ++k) {
    best = std::min(best, distance_to_segment(p, poly[k], poly[(k + 1) % poly.size()]));
  }
  return best;
}

bool LatticeFrame::in_closed_cell(const Point& p, double eps) const
{
  return distance_to_cell(p, {0, 0}) <= eps;
}

CellPoint wrap_to_cell(const Point& p, const LatticeFrame& frame)
{
  require_finite(p, "wrap_to_cell");
  const Point st = frame.coords(p);
  const double s = snap(st.x());
  const double t = snap(st.y());
  const LatticeIndex idx{static_cast<int>(std::floor(s)), static_cast<int>(std::floor(t))};
  const Point cell_point = p - idx.i * frame.u - idx.j * frame.v;
  return {cell_point, idx};
}

CellPoint wrap_to_cell(const Point& p, const TriLattice& lattice)
{
  return wrap_to_cell(p, lattice.frame());
}

int TriLattice::colour(LatticeIndex idx) const
{
  return static_cast<int>(positive_mod(static_cast<std::int64_t>(idx.i) - idx.j, 3));
}

int SquareLattice::colour(LatticeIndex idx) const
{
  return static_cast<int>(positive_mod(static_cast<std::int64_t>(idx.i) + idx.j, 2));
}

Polygon SquareLattice::voronoi_cell(LatticeIndex idx) const
{
  const Point c = point(idx);
  const double h = side / 2.0;
  return {{c.x() - h, c.y() - h}, {c.x() + h, c.y() - h}, {c.x() + h, c.y() + h}, {c.x() - h, c.y() + h}};
}

std::optional<std::pair<int, int>> loeschian_decompose(int k)
{
  if (k <= 0) {
    throw std::invalid_argument("loeschian_decompose: k must be a positive integer");
  }
  for (int a = 0; 3 * a * a <= k; ++a) {
    for (int b = a; a * a + a * b + b * b <= k; ++b) {
      if (a * a + a * b + b * b == k) {
        return std::pair{a, b};
      }
    }
  }
  return std::nullopt;
}

LoeschianColouring::LoeschianColouring(int k) : k_(k)
{
  const auto gen = loeschian_decompose(k);
  if (!gen) {
    throw std::invalid_argument("k = " + std::to_string(k) +
                                " is not a Loeschian number (k must equal a^2 + ab + b^2)");
  }
  std::tie(a_, b_) = *gen;
  // Column HNF of [[a, -b], [b, a + b]]: with a·x − b·y = g = gcd(a, b),
  // x·g1 + y·g2 = (g, b·x + (a + b)·y) and (b/g)·g1 + (a/g)·g2 = (0, k/g).
  std::int64_t old_r = a_, r = b_, old_x = 1, x = 0, old_y = 0, y = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_x, x) = std::pair{x, old_x - q * x};
    std::tie(old_y, y) = std::pair{y, old_y - q * y};
  }
  // a·old_x + b·old_y = g, so (x, y) := (old_x, −old_y) solves a·x − b·y = g.
  const std::int64_t g = old_r;
  const std::int64_t cx = old_x;
  const std::int64_t cy = -old_y;
  h11_ = g;
  h22_ = k_ / g;
  h21_ = positive_mod(b_ * cx + (a_ + b_) * cy, h22_);
}

int LoeschianColouring::colour(LatticeIndex idx) const
{
  const std::int64_t q = floor_div(idx.i, h11_);
  const std::int64_t i = idx.i - q * h11_;
  const std::int64_t j = positive_mod(idx.j - q * h21_, h22_);
  return static_cast<int>(i * h22_ + j);
}

std::vector<LatticePoint> points_in_box(const TriLattice& lattice, const BoundingBox& box)
{
  return points_in_box_impl(lattice, box);
}

std::vector<LatticePoint> points_in_box(const SquareLattice& lattice, const BoundingBox& box)
{
  return points_in_box_impl(lattice, box);
}

RegularHexagon voronoi_cell(const Point& lattice_point, const TriLattice& lattice)
{
  return {lattice_point, lattice.side / std::numbers::sqrt3};
}

LatticeIndex nearest_lattice_point(const Point& p, const LatticeFrame& frame)
{
  require_finite(p, "nearest_lattice_point");
  const Point st = frame.coords(p);
  const int i0 = static_cast<int>(std::floor(st.x()));
  const int j0 = static_cast<int>(std::floor(st.y()));
  LatticeIndex best{};
  double best_d = INFINITY;
  for (int dj = -1; dj <= 2; ++dj) {
    for (int di = -1; di <= 2; ++di) {
      const LatticeIndex idx{i0 + di, j0 + dj};
      const double d = (frame.point(idx) - p).norm();
      if (d < best_d - 1e-12 || (std::abs(d - best_d) <= 1e-12 && idx < best)) {
        best_d = std::min(d, best_d);
        best = idx;
      }
    }
  }
  return best;
}

std::vector<LatticeIndex> lattice_points_in_circle(const Circle& c, const LatticeFrame& frame, double eps)
{
  const Point st = frame.coords(c.center);
  // Extent of the circle along each coordinate: r·|row of the inverse basis|.
  Eigen::Matrix2d basis;
  basis.col(0) = frame.u;
  basis.col(1) = frame.v;
  const Eigen::Matrix2d inv = basis.inverse();
  const double rs = (c.radius + eps) * inv.row(0).norm();
  const double rt = (c.radius + eps) * inv.row(1).norm();
  std::vector<LatticeIndex> out;
  for (int j = static_cast<int>(std::floor(st.y() - rt)); j <= static_cast<int>(std::ceil(st.y() + rt)); ++j) {
    for (int i = static_cast<int>(std::floor(st.x() - rs)); i <= static_cast<int>(std::ceil(st.x() + rs));
         ++i) {
      const LatticeIndex idx{i, j};
      if (c.contains(frame.point(idx), eps)) {
        out.push_back(idx);
      }
    }
  }
  return out;
}

} // namespace diskpack
