#include "diskpack/bounds.hpp"

#include "diskpack/geom_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace diskpack {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt3 = std::numbers::sqrt3;

double simpson(double fa, double fm, double fb, double a, double b)
{
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double simpson_step(const std::function<double(double)>& f, double a, double b, double fa, double fm, double fb,
                    double whole, double tol, int depth)
{
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(fa, flm, fm, a, m);
  const double right = simpson(fm, frm, fb, m, b);
  const double diff = left + right - whole;
  if (depth <= 0 || std::abs(diff) <= 15.0 * tol) {
    return left + right + diff / 15.0;
  }
  return simpson_step(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

} // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol)
{
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  return simpson_step(f, a, b, fa, fm, fb, simpson(fa, fm, fb, a, b), tol, 50);
}

double w_lower_breakpoint()
{
  return 2.0 / kSqrt3 - 1.0;
}

double w_lower(double r)
{
  if (!(r >= 0.0 && r <= 1.0)) {
    throw std::invalid_argument("w_lower: r must lie in [0, 1]");
  }
  if (r <= w_lower_breakpoint()) {
    return kPi;
  }
  const double rho = 2.0 / kSqrt3;
  auto acos_clamped = [](double x) { return std::acos(std::clamp(x, -1.0, 1.0)); };
  const double k = (-r + 1.0 + rho) * (r + 1.0 - rho) * (r - 1.0 + rho) * (r + 1.0 + rho);
  return acos_clamped(0.5 * (r * r - 1.0 / 3.0) / r) +
         4.0 / 3.0 * acos_clamped(0.25 * (r * r + 1.0 / 3.0) * kSqrt3 / r) - 0.5 * std::sqrt(std::max(k, 0.0));
}

double weighted_bound_constant()
{
  auto integrand = [](double r) { return r * w_lower(r); };
  const double split = w_lower_breakpoint();
  return 2.0 * (adaptive_simpson(integrand, 0.0, split, 1e-10) + adaptive_simpson(integrand, split, 1.0, 1e-10));
}

double square_delta()
{
  // Unit disk through the square center; the intersection area is symmetric
  // under θ → π/2 − θ, so search [0, π/4] and refine by golden section.
  const double half = std::numbers::sqrt2;
  const Polygon square{{-half, -half}, {half, -half}, {half, half}, {-half, half}};
  auto area = [&](double theta) {
    return circle_polygon_intersection_area(Circle{{std::cos(theta), std::sin(theta)}, 1.0}, square);
  };
  constexpr int kGrid = 720;
  const double span = kPi / 4.0;
  int best = 0;
  double best_v = area(0.0);
  for (int k = 1; k <= kGrid; ++k) {
    const double v = area(span * k / kGrid);
    if (v < best_v) {
      best_v = v;
      best = k;
    }
  }
  double lo = span * std::max(best - 1, 0) / kGrid;
  double hi = span * std::min(best + 1, kGrid) / kGrid;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  while (hi - lo > 1e-12) {
    const double x1 = hi - inv_phi * (hi - lo);
    const double x2 = lo + inv_phi * (hi - lo);
    if (area(x1) <= area(x2)) {
      hi = x2;
    } else {
      lo = x1;
    }
  }
  return std::min(best_v, area(0.5 * (lo + hi)));
}

double alpha_k(int k)
{
  if (k < 1) {
    throw std::invalid_argument("alpha_k: k must be positive");
  }
  return 2.0 / (std::sqrt(static_cast<double>(k)) - 2.0 / kSqrt3);
}

double delta_k(int k)
{
  return 2.0 / kSqrt3 * alpha_k(k);
}

double kcolour_guarantee(int k)
{
  const double d = 1.0 + delta_k(k);
  return 1.0 / (d * d);
}

BoundsTable bound_table()
{
  BoundsTable t{};
  t.delta = delta_closed_form();
  t.delta2 = square_delta();
  t.weighted_constant = weighted_bound_constant();
  t.c1_lb = kPi / (8.0 * kSqrt3);
  t.c3_basic = kSqrt3 / 8.0 * t.delta;
  t.c3_weighted = kSqrt3 / 8.0 * t.weighted_constant;
  t.c2_basic = t.delta2 / 8.0;
  t.c3_upper = (3.0 * kPi - 3.0 * lens_area(1.0, 1.0, kSqrt3)) / (4.0 * kPi);
  return t;
}

} // namespace diskpack
