#include "diskpack/selector.hpp"

#include "diskpack/arrangement.hpp"
#include "diskpack/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numbers>
#include <thread>

namespace diskpack {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;
constexpr double kAreaTie = 1e-12;

struct PointChoice
{
  LatticeIndex index;
  std::size_t disk;
  double area;
};

double disk_cell_area(const Circle& c, const LatticeUsed& lattice, LatticeIndex idx, const Point& lattice_point)
{
  // Hexagonal and square cells both have inradius side/2.
  if ((c.center - lattice_point).norm() + c.radius <= lattice.side / 2.0) {
    return std::numbers::pi * c.radius * c.radius;
  }
  return circle_polygon_intersection_area(c, lattice.voronoi_cell(idx));
}

// For every lattice point inside the union, the containing disk with the
// largest Voronoi-cell intersection (ties: lowest disk index).
std::vector<PointChoice> choose_per_point(const DiskSet& disks, const LatticeUsed& lattice)
{
  const LatticeFrame frame = lattice.frame();
  std::vector<PointChoice> all;
  for (std::size_t k = 0; k < disks.size(); ++k) {
    const Circle c = disks.circle(k);
    for (const LatticeIndex& idx : lattice_points_in_circle(c, frame)) {
      all.push_back({idx, k, disk_cell_area(c, lattice, idx, frame.point(idx))});
    }
  }
  std::stable_sort(all.begin(), all.end(),
                   [](const PointChoice& a, const PointChoice& b) { return a.index < b.index; });
  std::vector<PointChoice> best;
  for (const PointChoice& c : all) {
    if (best.empty() || best.back().index != c.index) {
      best.push_back(c);
    } else if (c.area > best.back().area + kAreaTie) {
      best.back() = c;
    }
  }
  return best;
}

CoverageReport coverage(const DiskSet& disks, const std::vector<std::optional<int>>& labels)
{
  CoverageReport r;
  r.union_area = exact_union_area(disks);
  DiskSet chosen{disks.radius, {}};
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (labels[k]) {
      chosen.centers.push_back(disks.centers[k]);
    }
  }
  r.selected_area = exact_union_area(chosen);
  r.ratio = r.union_area > 0.0 ? std::min(1.0, r.selected_area / r.union_area) : 0.0;
  return r;
}

Solution solve_with_lattice(const DiskSet& disks, const LatticeUsed& lattice, std::string solver, double guarantee)
{
  Solution s;
  Assignment& a = s.assignment;
  a.labels.assign(disks.size(), std::nullopt);
  a.k = lattice.k;
  a.lattice = lattice;
  a.solver = std::move(solver);
  a.guarantee = guarantee;

  double accounting = 0.0;
  const std::vector<PointChoice> choices = choose_per_point(disks, lattice);
  for (const PointChoice& c : choices) {
    a.labels[c.disk] = lattice.colour(c.index);
    accounting += c.area;
  }
  a.selected_count = choices.size();
  s.report = coverage(disks, a.labels);
  s.report.guarantee = guarantee;
  s.report.lattice_points_hit = static_cast<int>(choices.size());
  s.report.hexagon_accounting = accounting;
  return s;
}

// Offset putting a lattice point at the deepest point of the cell arrangement.
Point deepest_offset(const DiskSet& disks, const LatticeFrame& frame)
{
  const std::vector<TranslatedCircle> copies = translate_to_cell(disks, frame);
  return max_distinct_translate_depth(copies, frame).point;
}

Solution empty_solution(const LatticeUsed& lattice, std::string solver, double guarantee)
{
  Solution s;
  s.assignment.k = lattice.k;
  s.assignment.lattice = lattice;
  s.assignment.solver = std::move(solver);
  s.assignment.guarantee = guarantee;
  s.report.guarantee = guarantee;
  return s;
}

bool lex_less(const Point& a, const Point& b)
{
  return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
}

} // namespace

const char* to_string(Colouring c)
{
  switch (c) {
    case Colouring::single:
      return "single";
    case Colouring::tri3:
      return "tri3";
    case Colouring::checkerboard:
      return "checkerboard";
    case Colouring::loeschian:
      return "loeschian";
  }
  return "?";
}

Colouring colouring_from_string(const std::string& s)
{
  for (Colouring c : {Colouring::single, Colouring::tri3, Colouring::checkerboard, Colouring::loeschian}) {
    if (s == to_string(c)) {
      return c;
    }
  }
  throw std::invalid_argument("unknown lattice colouring '" + s + "'");
}

LatticeFrame LatticeUsed::frame() const
{
  if (is_square()) {
    return SquareLattice{side, offset}.frame();
  }
  return TriLattice{side, offset}.frame();
}

int LatticeUsed::colour(LatticeIndex idx) const
{
  switch (colouring) {
    case Colouring::single:
      return 0;
    case Colouring::tri3:
      return TriLattice{side, offset}.colour(idx);
    case Colouring::checkerboard:
      return SquareLattice{side, offset}.colour(idx);
    case Colouring::loeschian:
      return LoeschianColouring(k).colour(idx);
  }
  return 0;
}

Polygon LatticeUsed::voronoi_cell(LatticeIndex idx) const
{
  if (is_square()) {
    return SquareLattice{side, offset}.voronoi_cell(idx);
  }
  const TriLattice tri{side, offset};
  return diskpack::voronoi_cell(tri.point(idx), tri).vertices();
}

unsigned worker_threads()
{
  if (const char* env = std::getenv("DISKPACK_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) {
      return static_cast<unsigned>(n);
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

double lattice_weight(const DiskSet& disks, const LatticeUsed& lattice)
{
  double w = 0.0;
  for (const PointChoice& c : choose_per_point(disks, lattice)) {
    w += c.area;
  }
  return w;
}

Solution solve_basic_3colour(const DiskSet& disks)
{
  disks.validate();
  const double guarantee = kSqrt3 / 8.0 * delta_closed_form();
  LatticeUsed lattice{Colouring::tri3, 4.0 / kSqrt3, Point::Zero(), 3};
  if (disks.empty()) {
    return empty_solution(lattice, "basic3", guarantee);
  }
  lattice.offset = deepest_offset(disks, lattice.frame());
  return solve_with_lattice(disks, lattice, "basic3", guarantee);
}

Solution solve_weighted_3colour(const DiskSet& disks, const OffsetSampling& sampling)
{
  disks.validate();
  if (sampling.grid < 1) {
    throw std::invalid_argument("solve_weighted_3colour: sampling grid must be at least 1x1");
  }
  // W(L) ≥ W at the basic offset ≥ |C|·Δ, so the basic guarantee carries over.
  const double guarantee = kSqrt3 / 8.0 * delta_closed_form();
  const LatticeUsed base{Colouring::tri3, 4.0 / kSqrt3, Point::Zero(), 3};
  if (disks.empty()) {
    return empty_solution(base, "weighted3", guarantee);
  }
  const LatticeFrame frame = base.frame();
  const std::vector<TranslatedCircle> copies = translate_to_cell(disks, frame);

  std::vector<Point> candidates;
  candidates.push_back(max_distinct_translate_depth(copies, frame).point);
  if (sampling.arrangement_vertices) {
    for (const Point& p : max_depth_candidates(copies, frame)) {
      candidates.push_back(p);
    }
  }
  const int g = sampling.grid;
  for (int j = 0; j < g; ++j) {
    for (int i = 0; i < g; ++i) {
      candidates.push_back(frame.origin + (i + 0.5) / g * frame.u + (j + 0.5) / g * frame.v);
    }
  }
  if (sampling.disk_centers) {
    for (const Point& c : disks.centers) {
      candidates.push_back(wrap_to_cell(c, frame).cell_point);
    }
  }

  std::vector<double> weights(candidates.size(), 0.0);
  auto evaluate = [&](std::size_t begin, std::size_t end) {
    LatticeUsed l = base;
    for (std::size_t k = begin; k < end; ++k) {
      l.offset = candidates[k];
      weights[k] = lattice_weight(disks, l);
    }
  };
  const unsigned threads = std::min<std::size_t>(worker_threads(), candidates.size());
  if (threads <= 1) {
    evaluate(0, candidates.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (candidates.size() + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t begin = t * chunk;
      const std::size_t end = std::min(candidates.size(), begin + chunk);
      if (begin < end) {
        pool.emplace_back(evaluate, begin, end);
      }
    }
    for (std::thread& th : pool) {
      th.join();
    }
  }

  std::size_t best = 0;
  for (std::size_t k = 1; k < candidates.size(); ++k) {
    if (weights[k] > weights[best] || (weights[k] == weights[best] && lex_less(candidates[k], candidates[best]))) {
      best = k;
    }
  }
  LatticeUsed lattice = base;
  lattice.offset = candidates[best];
  return solve_with_lattice(disks, lattice, "weighted3", guarantee);
}

Solution solve_rado_1colour(const DiskSet& disks)
{
  disks.validate();
  const double guarantee = std::numbers::pi / (8.0 * kSqrt3);
  LatticeUsed lattice{Colouring::single, 4.0, Point::Zero(), 1};
  if (disks.empty()) {
    return empty_solution(lattice, "rado1", guarantee);
  }
  lattice.offset = deepest_offset(disks, lattice.frame());
  return solve_with_lattice(disks, lattice, "rado1", guarantee);
}

Solution solve_square_2colour(const DiskSet& disks)
{
  disks.validate();
  const double guarantee = square_delta() / 8.0;
  LatticeUsed lattice{Colouring::checkerboard, 2.0 * std::numbers::sqrt2, Point::Zero(), 2};
  if (disks.empty()) {
    return empty_solution(lattice, "square2", guarantee);
  }
  lattice.offset = deepest_offset(disks, lattice.frame());
  return solve_with_lattice(disks, lattice, "square2", guarantee);
}

Solution solve_kcolour(const DiskSet& disks, int k)
{
  disks.validate();
  if (k < 1 || !loeschian_decompose(k)) {
    throw std::invalid_argument("solve_kcolour: k = " + std::to_string(k) +
                                " is not a Loeschian number (k must equal a^2 + ab + b^2)");
  }
  if (alpha_k(k) <= 0.0) {
    Solution s = solve_rado_1colour(disks);
    s.assignment.solver = "kcolour";
    return s;
  }
  const double guarantee = kcolour_guarantee(k);
  const LatticeUsed lattice{Colouring::loeschian, alpha_k(k), Point::Zero(), k};
  if (disks.empty()) {
    return empty_solution(lattice, "kcolour", guarantee);
  }
  const LatticeFrame frame = lattice.frame();
  const LoeschianColouring colouring(k);

  // Each disk belongs to the cell containing its center; the cell keeps the
  // disk nearest its lattice point.
  std::map<LatticeIndex, std::pair<double, std::size_t>> cells;
  for (std::size_t d = 0; d < disks.size(); ++d) {
    const LatticeIndex idx = nearest_lattice_point(disks.centers[d], frame);
    const double dist = (disks.centers[d] - frame.point(idx)).norm();
    auto [it, inserted] = cells.try_emplace(idx, dist, d);
    if (!inserted && dist < it->second.first) {
      it->second = {dist, d};
    }
  }

  Solution s;
  Assignment& a = s.assignment;
  a.labels.assign(disks.size(), std::nullopt);
  a.k = k;
  a.lattice = lattice;
  a.solver = "kcolour";
  a.guarantee = guarantee;
  double accounting = 0.0;
  for (const auto& [idx, choice] : cells) {
    a.labels[choice.second] = colouring.colour(idx);
    accounting += circle_polygon_intersection_area(disks.circle(choice.second), lattice.voronoi_cell(idx));
  }
  a.selected_count = cells.size();
  s.report = coverage(disks, a.labels);
  s.report.guarantee = guarantee;
  s.report.lattice_points_hit = static_cast<int>(cells.size());
  s.report.hexagon_accounting = accounting;
  return s;
}

CoverageReport verify(const DiskSet& disks, const Assignment& assignment)
{
  disks.validate();
  if (assignment.labels.size() != disks.size()) {
    throw std::invalid_argument("verify: assignment has " + std::to_string(assignment.labels.size()) +
                                " labels for " + std::to_string(disks.size()) + " disks");
  }
  if (assignment.k < 1) {
    throw std::invalid_argument("verify: number of colours must be positive");
  }
  std::vector<std::size_t> selected;
  for (std::size_t d = 0; d < disks.size(); ++d) {
    if (const auto& label = assignment.labels[d]) {
      if (*label < 0 || *label >= assignment.k) {
        throw std::invalid_argument("verify: disk " + std::to_string(d) + " has colour " +
                                    std::to_string(*label) + " outside [0, " + std::to_string(assignment.k) +
                                    ")");
      }
      selected.push_back(d);
    }
  }
  const double min_gap = 2.0 * disks.radius - kGeomEps;
  for (std::size_t x = 0; x < selected.size(); ++x) {
    for (std::size_t y = x + 1; y < selected.size(); ++y) {
      const std::size_t p = selected[x];
      const std::size_t q = selected[y];
      if (*assignment.labels[p] == *assignment.labels[q] &&
          (disks.centers[p] - disks.centers[q]).norm() < min_gap) {
        throw VerificationError(p, q,
                                "disks " + std::to_string(p) + " and " + std::to_string(q) + " share colour " +
                                  std::to_string(*assignment.labels[p]) + " but overlap");
      }
    }
  }

  CoverageReport r = coverage(disks, assignment.labels);
  r.guarantee = assignment.guarantee;
  r.lattice_points_hit = static_cast<int>(selected.size());
  const LatticeFrame frame = assignment.lattice.frame();
  for (std::size_t d : selected) {
    const Circle c = disks.circle(d);
    double best = 0.0;
    for (const LatticeIndex& idx : lattice_points_in_circle(c, frame)) {
      best = std::max(best, circle_polygon_intersection_area(c, assignment.lattice.voronoi_cell(idx)));
    }
    r.hexagon_accounting += best;
  }
  return r;
}

} // namespace diskpack
