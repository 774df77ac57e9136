#include "diskpack/geom_core.hpp"

#include <cmath>
#include <numbers>

namespace diskpack {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt3 = std::numbers::sqrt3;

// Intersection points of the disk boundary with the hexagon, and the two
// hexagon vertices D (30°) and E (−30°). B is the disk center.
struct BoundaryPoints
{
  double ax, ay, bx, by, cx, cy, dx, dy, ex, ey;
};

// Upper crossing A, on the edge between the 30° and 90° vertices.
void point_a(double theta, BoundaryPoints& p)
{
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  const double t = -2.0 / 3.0 * kSqrt3 + 0.5 * s * kSqrt3 + 0.5 * c;
  const double root = std::sqrt(std::max(0.0, 1.0 - t * t));
  p.ax = kSqrt3 / 3.0 - 0.5 * root * kSqrt3 - 0.25 * s * kSqrt3 + 0.75 * c;
  p.ay = 1.0 + 0.5 * root + 0.25 * s - 0.25 * c * kSqrt3;
  p.bx = c;
  p.by = s;
}

// Sector of the unit disk interior to angle ABC, on the side containing the
// hexagon center.
double sector(const BoundaryPoints& p)
{
  const double num = -(-p.bx + p.cx) * (-p.ay + p.by) + (p.by - p.cy) * (p.ax - p.bx);
  const double den = (-p.bx + p.cx) * (p.ax - p.bx) + (p.by - p.cy) * (-p.ay + p.by);
  return 0.5 * (kPi - std::atan(num / den));
}

// Two hexagon vertices inside the disk: polygon ABCED plus sector.
double f1(double theta)
{
  BoundaryPoints p{};
  point_a(theta, p);
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  const double t = 2.0 / 3.0 * kSqrt3 + 0.5 * s * kSqrt3 - 0.5 * c;
  const double root = std::sqrt(std::max(0.0, 1.0 - t * t));
  p.cx = kSqrt3 / 3.0 - 0.5 * root * kSqrt3 + 0.25 * s * kSqrt3 + 0.75 * c;
  p.cy = -1.0 - 0.5 * root + 0.25 * s + 0.25 * c * kSqrt3;
  p.dx = 2.0 / 3.0 * kSqrt3;
  p.dy = 2.0 / 3.0;
  p.ex = 2.0 / 3.0 * kSqrt3;
  p.ey = -2.0 / 3.0;
  const double polygon = 0.5 * (p.ax * (p.by - p.dy) + p.bx * (p.cy - p.ay) + p.cx * (p.ey - p.by) +
                                p.ex * (p.dy - p.cy) + p.dx * (p.ay - p.ey));
  return polygon + sector(p);
}

// One hexagon vertex inside the disk: polygon ABCD plus sector.
double f2(double theta)
{
  BoundaryPoints p{};
  point_a(theta, p);
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  p.cx = 2.0 / 3.0 * kSqrt3;
  p.cy = -1.0 / 3.0 * std::sqrt(std::max(0.0, -3.0 + 12.0 * c * kSqrt3 - 9.0 * c * c)) + s;
  p.dx = 2.0 / 3.0 * kSqrt3;
  p.dy = 2.0 / 3.0;
  const double polygon =
    0.5 * (p.ax * (p.by - p.dy) + p.bx * (p.cy - p.ay) + p.cx * (p.dy - p.by) + p.dx * (p.ay - p.cy));
  return polygon + sector(p);
}

} // namespace

Polygon RegularHexagon::vertices() const
{
  Polygon out;
  out.reserve(6);
  for (int k = 0; k < 6; ++k) {
    const double a = kPi / 6.0 + k * kPi / 3.0;
    out.emplace_back(center.x() + side * std::cos(a), center.y() + side * std::sin(a));
  }
  return out;
}

bool RegularHexagon::contains(const Point& p, double eps) const
{
  // Inside all six edge half-planes; edge normals point at 0°, 60°, ...
  const Point d = p - center;
  for (int k = 0; k < 6; ++k) {
    const double a = k * kPi / 3.0;
    if (d.x() * std::cos(a) + d.y() * std::sin(a) > inradius() + eps) {
      return false;
    }
  }
  return true;
}

double f_theta_breakpoint()
{
  return std::acos(2.0 / 3.0) - kPi / 6.0;
}

double f_theta(double theta)
{
  if (!(theta >= 0.0 && theta <= kPi / 3.0)) {
    throw std::invalid_argument("f_theta: theta must lie in [0, pi/3]");
  }
  // The configuration is mirror symmetric about the vertex direction π/6.
  if (theta > kPi / 6.0) {
    theta = kPi / 3.0 - theta;
  }
  return theta < f_theta_breakpoint() ? f1(theta) : f2(theta);
}

double delta_closed_form()
{
  const double s11 = std::sqrt(11.0);
  return kSqrt3 / 36.0 + s11 / 12.0 + kPi / 2.0 -
         0.5 * std::atan((5.0 * kSqrt3 - s11) / (5.0 + s11 * kSqrt3));
}

std::pair<double, double> minimize_f_theta(double tol)
{
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = 0.0;
  double hi = kPi / 3.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1v = f_theta(x1);
  double f2v = f_theta(x2);
  while (hi - lo > tol) {
    if (f1v <= f2v) {
      hi = x2;
      x2 = x1;
      f2v = f1v;
      x1 = hi - inv_phi * (hi - lo);
      f1v = f_theta(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1v = f2v;
      x2 = lo + inv_phi * (hi - lo);
      f2v = f_theta(x2);
    }
  }
  const double x = 0.5 * (lo + hi);
  return {x, f_theta(x)};
}

} // namespace diskpack
