// Coverage guarantees and the analytic machinery behind them.
#pragma once

#include <functional>

namespace diskpack {

/// Lower bound on the weight of a lattice point at distance r ∈ [0, 1] from
/// the nearest disk center: area of a unit disk intersected with the disk of
/// radius 2/√3 (the hexagon's incircle) at center distance r.
double w_lower(double r);

/// r below which the unit disk lies inside the incircle: 2/√3 − 1.
double w_lower_breakpoint();

/// 2·∫₀¹ r·w_lower(r) dr, the lower bound on the total weight per unit of
/// union area (≈ 2.207).
double weighted_bound_constant();

/// Adaptive Simpson quadrature of f over [a, b] to absolute tolerance tol.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol);

/// Minimum area of a unit disk intersected with the Voronoi square (side 2√2)
/// of the 2-colour lattice, over disks whose boundary passes through the
/// square's center (≈ 2.3749).
double square_delta();

/// Scale α_k = 2 / (√k − 2/√3) of the unit triangular lattice for k colours.
/// Non-positive for k = 1, where the k-colour construction does not apply.
double alpha_k(int k);

/// Voronoi-cell diameter δ_k = (2/√3)·α_k of the scaled lattice.
double delta_k(int k);

/// Coverage guarantee 1 / (1 + δ_k)².
double kcolour_guarantee(int k);

struct BoundsTable
{
  double c1_lb;       // π / (8√3), one colour
  double c3_basic;    // √3·Δ / 8, 3 colours via point counting
  double c3_weighted; // (√3/8)·2∫ r·w_lower(r) dr, 3 colours via weights
  double c2_basic;    // Δ₂ / 8, 2 colours via point counting
  double c3_upper;    // (3π − 3·lens(1, 1, √3)) / (4π), 3 colours, best possible
  double delta;       // Δ
  double delta2;      // Δ₂
  double weighted_constant;
};

BoundsTable bound_table();

} // namespace diskpack
