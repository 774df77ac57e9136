#include "diskpack/svg.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace diskpack {

namespace {

constexpr const char* kUnselected = "#bdbdbd";

std::string num(double x)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  // Avoid "-0" so output does not depend on the sign of zero.
  return std::string(buf) == "-0" ? std::string("0") : std::string(buf);
}

} // namespace

std::string palette_colour(int colour)
{
  static constexpr std::array<const char*, 12> kPalette = {
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628",
    "#f781bf", "#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e",
  };
  if (colour < 0) {
    return kUnselected;
  }
  if (colour < static_cast<int>(kPalette.size())) {
    return kPalette[static_cast<std::size_t>(colour)];
  }
  // Golden-angle hues past the fixed palette.
  const double hue = std::fmod(colour * 137.50776405003785, 360.0);
  char buf[40];
  std::snprintf(buf, sizeof buf, "hsl(%.1f,65%%,50%%)", hue);
  return buf;
}

std::string render_svg(const DiskSet& disks,
                       const std::optional<Assignment>& assignment,
                       const std::optional<LatticeUsed>& lattice,
                       const SvgOptions& options)
{
  if (!(options.scale > 0.0)) {
    throw std::invalid_argument("render_svg: scale must be positive");
  }
  if (assignment && assignment->labels.size() != disks.size()) {
    throw std::invalid_argument("render_svg: assignment does not match the instance");
  }
  const std::optional<LatticeUsed> grid = lattice ? lattice : assignment ? std::optional(assignment->lattice) : std::nullopt;
  const double s = options.scale;

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  if (disks.empty()) {
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"100\" height=\"100\" viewBox=\"0 0 100 100\">\n</svg>\n";
    return out;
  }

  Point lo = disks.centers.front();
  Point hi = lo;
  for (const Point& c : disks.centers) {
    lo = lo.cwiseMin(c);
    hi = hi.cwiseMax(c);
  }
  const double pad = disks.radius * 1.25;
  lo.array() -= pad;
  hi.array() += pad;
  const double w = (hi.x() - lo.x()) * s;
  const double h = (hi.y() - lo.y()) * s;
  // SVG y grows downwards; flip so the picture matches the plane.
  auto px = [&](const Point& p) { return Point((p.x() - lo.x()) * s, (hi.y() - p.y()) * s); };

  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) + "\" height=\"" + num(h) +
         "\" viewBox=\"0 0 " + num(w) + " " + num(h) + "\">\n";
  out += "<rect class=\"background\" width=\"" + num(w) + "\" height=\"" + num(h) + "\" fill=\"white\"/>\n";

  std::vector<LatticePoint> points;
  if (grid && (options.lattice_points || options.voronoi_cells)) {
    const BoundingBox box{lo, hi};
    points = grid->is_square() ? points_in_box(SquareLattice{grid->side, grid->offset}, box)
                               : points_in_box(TriLattice{grid->side, grid->offset}, box);
  }

  if (grid && options.voronoi_cells) {
    out += "<g id=\"voronoi\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\">\n";
    for (const LatticePoint& lp : points) {
      out += "<polygon class=\"cell\" points=\"";
      bool first = true;
      for (const Point& v : grid->voronoi_cell(lp.index)) {
        const Point q = px(v);
        out += (first ? "" : " ") + num(q.x()) + "," + num(q.y());
        first = false;
      }
      out += "\"/>\n";
    }
    out += "</g>\n";
  }

  out += "<g id=\"disks\" stroke=\"#333333\" stroke-width=\"1\" fill-opacity=\"0.45\">\n";
  for (std::size_t k = 0; k < disks.size(); ++k) {
    const std::optional<int> label = assignment ? assignment->labels[k] : std::nullopt;
    const Point q = px(disks.centers[k]);
    out += "<circle class=\"disk\" cx=\"" + num(q.x()) + "\" cy=\"" + num(q.y()) + "\" r=\"" +
           num(disks.radius * s) + "\" fill=\"" + (label ? palette_colour(*label) : std::string(kUnselected)) +
           "\"/>\n";
  }
  out += "</g>\n";

  if (grid && options.lattice_points) {
    out += "<g id=\"lattice\">\n";
    for (const LatticePoint& lp : points) {
      const Point q = px(lp.position);
      out += "<circle class=\"lattice-point\" cx=\"" + num(q.x()) + "\" cy=\"" + num(q.y()) +
             "\" r=\"3\" fill=\"" + palette_colour(grid->colour(lp.index)) + "\" stroke=\"black\"/>\n";
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

} // namespace diskpack
