// Exact planar primitives: lens areas, circle/convex-polygon clipping and the
// disk-hexagon intersection function used for the 3-colour guarantee.
#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace diskpack {

template <typename Scalar>
using Point2 = Eigen::Matrix<Scalar, 2, 1>;

using Point = Point2<double>;
using Polygon = std::vector<Point>;

/// Absolute tolerance for geometric predicates, in plane units.
inline constexpr double kGeomEps = 1e-9;

template <typename Scalar>
struct CircleT
{
  Point2<Scalar> center;
  Scalar radius;

  /// Closed-disk membership with tolerance.
  bool contains(const Point2<Scalar>& p, Scalar eps = Scalar(kGeomEps)) const
  {
    return (p - center).norm() <= radius + eps;
  }
};

using Circle = CircleT<double>;

/// Regular hexagon with vertices at 30° + k·60° around its center, i.e. the
/// Voronoi cell of a triangular lattice whose first basis vector is +x.
struct RegularHexagon
{
  Point center;
  double side;

  double inradius() const { return side * std::numbers::sqrt3 / 2.0; }
  /// Counterclockwise, starting at the vertex at 30°.
  Polygon vertices() const;
  bool contains(const Point& p, double eps = kGeomEps) const;
};

inline bool is_finite(const Point& p)
{
  return std::isfinite(p.x()) && std::isfinite(p.y());
}

inline void require_finite(const Point& p, const char* what)
{
  if (!is_finite(p)) {
    throw std::invalid_argument(std::string(what) + ": coordinates must be finite");
  }
}

template <typename Scalar>
Scalar cross(const Point2<Scalar>& a, const Point2<Scalar>& b)
{
  return a.x() * b.y() - a.y() * b.x();
}

/// Area of the intersection of two circles with radii r1, r2 whose centers are
/// d apart.
template <typename Scalar>
Scalar lens_area(Scalar r1, Scalar r2, Scalar d)
{
  using std::acos;
  using std::sqrt;
  if (!(std::isfinite(r1) && std::isfinite(r2) && r1 > 0 && r2 > 0)) {
    throw std::invalid_argument("lens_area: radii must be finite and positive");
  }
  if (!(std::isfinite(d) && d >= 0)) {
    throw std::invalid_argument("lens_area: center distance must be finite and non-negative");
  }
  const Scalar pi = std::numbers::pi_v<Scalar>;
  if (d >= r1 + r2) {
    return Scalar(0);
  }
  if (d <= std::abs(r1 - r2)) {
    const Scalar r = std::min(r1, r2);
    return pi * r * r;
  }
  auto clamp = [](Scalar x) { return std::clamp(x, Scalar(-1), Scalar(1)); };
  const Scalar a1 = acos(clamp((d * d + r1 * r1 - r2 * r2) / (2 * d * r1)));
  const Scalar a2 = acos(clamp((d * d + r2 * r2 - r1 * r1) / (2 * d * r2)));
  const Scalar k = (-d + r1 + r2) * (d + r1 - r2) * (d - r1 + r2) * (d + r1 + r2);
  const Scalar area = r1 * r1 * a1 + r2 * r2 * a2 - Scalar(0.5) * sqrt(std::max(k, Scalar(0)));
  return std::clamp(area, Scalar(0), pi * std::min(r1, r2) * std::min(r1, r2));
}

/// Signed shoelace area (positive for counterclockwise order).
template <typename Scalar>
Scalar signed_polygon_area(std::span<const Point2<Scalar>> poly)
{
  Scalar twice = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    twice += cross<Scalar>(poly[i], poly[(i + 1) % poly.size()]);
  }
  return twice / 2;
}

namespace detail {

// Signed area of (circle of radius r at the origin) ∩ triangle(origin, a, b).
template <typename Scalar>
Scalar circle_triangle_signed_area(const Point2<Scalar>& a, const Point2<Scalar>& b, Scalar r)
{
  using std::atan2;
  using std::sqrt;
  const Point2<Scalar> dir = b - a;
  const Scalar qa = dir.squaredNorm();
  if (qa == 0) {
    return Scalar(0);
  }
  // Split the edge where it crosses the circle.
  const Scalar qb = a.dot(dir);
  const Scalar qc = a.squaredNorm() - r * r;
  const Scalar disc = qb * qb - qa * qc;
  std::array<Scalar, 4> ts{Scalar(0), Scalar(0), Scalar(0), Scalar(1)};
  std::size_t count = 1;
  if (disc > 0) {
    const Scalar s = sqrt(disc);
    for (Scalar t : {(-qb - s) / qa, (-qb + s) / qa}) {
      if (t > 0 && t < 1) {
        ts[count++] = t;
      }
    }
  }
  ts[count++] = Scalar(1);

  Scalar area = 0;
  for (std::size_t i = 0; i + 1 < count; ++i) {
    const Point2<Scalar> p = a + ts[i] * dir;
    const Point2<Scalar> q = a + ts[i + 1] * dir;
    const Point2<Scalar> mid = (p + q) / 2;
    if (mid.squaredNorm() <= r * r) {
      area += cross<Scalar>(p, q) / 2;
    } else {
      area += r * r * atan2(cross<Scalar>(p, q), p.dot(q)) / 2;
    }
  }
  return area;
}

} // namespace detail

/// Exact area of a circle intersected with a convex, counterclockwise polygon.
/// Throws std::invalid_argument on a degenerate, clockwise or non-convex
/// polygon.
template <typename Scalar>
Scalar circle_polygon_intersection_area(const CircleT<Scalar>& c, std::span<const Point2<Scalar>> poly)
{
  if (!(std::isfinite(c.radius) && c.radius > 0) || !std::isfinite(c.center.x()) ||
      !std::isfinite(c.center.y())) {
    throw std::invalid_argument("circle_polygon_intersection_area: invalid circle");
  }
  if (poly.size() < 3) {
    throw std::invalid_argument("circle_polygon_intersection_area: polygon needs at least 3 vertices");
  }
  const Scalar poly_area = signed_polygon_area<Scalar>(poly);
  if (!(std::abs(poly_area) > Scalar(kGeomEps))) {
    throw std::invalid_argument("circle_polygon_intersection_area: degenerate (zero-area) polygon");
  }
  if (poly_area < 0) {
    throw std::invalid_argument("circle_polygon_intersection_area: polygon must be counterclockwise");
  }
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2<Scalar> e0 = poly[(i + 1) % n] - poly[i];
    const Point2<Scalar> e1 = poly[(i + 2) % n] - poly[(i + 1) % n];
    if (cross<Scalar>(e0, e1) < -Scalar(kGeomEps) * e0.norm() * e1.norm()) {
      throw std::invalid_argument("circle_polygon_intersection_area: polygon must be convex");
    }
  }

  Scalar area = 0;
  for (std::size_t i = 0; i < n; ++i) {
    area += detail::circle_triangle_signed_area<Scalar>(
      poly[i] - c.center, poly[(i + 1) % n] - c.center, c.radius);
  }
  const Scalar pi = std::numbers::pi_v<Scalar>;
  return std::clamp(area, Scalar(0), std::min(pi * c.radius * c.radius, poly_area));
}

inline double circle_polygon_intersection_area(const Circle& c, const Polygon& poly)
{
  return circle_polygon_intersection_area<double>(c, std::span<const Point>(poly));
}

inline double circle_polygon_intersection_area(const Circle& c, const RegularHexagon& h)
{
  return circle_polygon_intersection_area(c, h.vertices());
}

/// Side of the Voronoi hexagon of the 3-colour lattice.
inline constexpr double kHexSide = 4.0 / 3.0;

/// Area of the hexagon (side 4/3, centered at the origin) intersected with the
/// unit disk centered at (cos θ, sin θ), whose boundary passes through the
/// hexagon center. Piecewise closed form; θ ∈ [0, π/3].
double f_theta(double theta);

/// θ where the closed form switches from the two-vertex case to the
/// one-vertex case: arccos(2/3) − π/6.
double f_theta_breakpoint();

/// Minimum disk-hexagon intersection area over unit disks containing the
/// hexagon center, in closed form (≈ 1.6645382).
double delta_closed_form();

/// Golden-section minimum of f_theta over [0, π/3]; returns {θ*, f(θ*)}.
std::pair<double, double> minimize_f_theta(double tol = 1e-12);

} // namespace diskpack
