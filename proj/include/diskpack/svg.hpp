// SVG rendering of instances and selections.
#pragma once

#include "diskpack/selector.hpp"
#include "diskpack/union_area.hpp"

#include <optional>
#include <string>

namespace diskpack {

struct SvgOptions
{
  /// Pixels per unit length.
  double scale = 40.0;
  bool lattice_points = false;
  bool voronoi_cells = false;
};

/// Deterministic SVG document. Unselected disks are grey; colours index a
/// fixed palette. The lattice layers need a lattice: the explicit one when
/// given, otherwise the assignment's.
std::string render_svg(const DiskSet& disks,
                       const std::optional<Assignment>& assignment = std::nullopt,
                       const std::optional<LatticeUsed>& lattice = std::nullopt,
                       const SvgOptions& options = {});

/// Fill colour for a colour index.
std::string palette_colour(int colour);

} // namespace diskpack
