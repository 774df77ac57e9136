#include "diskpack/arrangement.hpp"

#include "diskpack/union_area.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace diskpack {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Crossings closer than this (radians on a unit circle) are one vertex.
constexpr double kAngleTol = 1e-10;

struct Event
{
  double angle;
  int delta;
  int key;
};

struct SweepResult
{
  int best = -1;
  Point best_point = Point::Zero();
  std::vector<Point> best_points;
};

bool lex_less(const Point& a, const Point& b)
{
  return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
}

double normalize_angle(double a)
{
  a = std::fmod(a, kTwoPi);
  if (a < 0) {
    a += kTwoPi;
  }
  return a >= kTwoPi ? 0.0 : a;
}

// Tracks how many disks of each key cover the current sweep position and how
// many keys are covered at all.
class KeyCounter
{
public:
  explicit KeyCounter(int key_count) : counts_(static_cast<std::size_t>(key_count), 0) {}

  void add(int key, int delta)
  {
    int& c = counts_[static_cast<std::size_t>(key)];
    if (c == 0) {
      touched_.push_back(key);
    }
    const bool was = c > 0;
    c += delta;
    const bool now = c > 0;
    nonzero_ += static_cast<int>(now) - static_cast<int>(was);
  }

  int nonzero() const { return nonzero_; }

  void reset()
  {
    for (int k : touched_) {
      counts_[static_cast<std::size_t>(k)] = 0;
    }
    touched_.clear();
    nonzero_ = 0;
  }

private:
  std::vector<int> counts_;
  std::vector<int> touched_;
  int nonzero_ = 0;
};

// For each circle, sweeps its boundary through the crossings with every other
// circle and evaluates the number of distinct covering keys at each crossing
// (closed disks). Circles crossing nobody are scored by `isolated`.
SweepResult sweep_max(std::span<const Circle> circles, std::span<const int> keys, int key_count,
                      const std::function<bool(const Point&)>& accept,
                      const std::function<std::pair<Point, int>(std::size_t)>& isolated, bool collect)
{
  SweepResult result;
  auto offer = [&](const Point& p, int value) {
    if (value > result.best || (value == result.best && lex_less(p, result.best_point))) {
      if (value > result.best) {
        result.best_points.clear();
      }
      result.best = value;
      result.best_point = p;
    }
    if (collect && value == result.best) {
      result.best_points.push_back(p);
    }
  };

  KeyCounter counter(key_count);
  std::vector<Event> events;
  struct Arc
  {
    double start;
    double length;
    int key;
  };
  std::vector<Arc> arcs;
  std::vector<double> angles;

  for (std::size_t a = 0; a < circles.size(); ++a) {
    const Circle& ca = circles[a];
    counter.reset();
    arcs.clear();
    counter.add(keys[a], 1);
    for (std::size_t b = 0; b < circles.size(); ++b) {
      if (b == a) {
        continue;
      }
      const Circle& cb = circles[b];
      const Point delta = cb.center - ca.center;
      const double d = delta.norm();
      if (d > ca.radius + cb.radius + kGeomEps || d < ca.radius - cb.radius - kGeomEps) {
        continue;
      }
      if (d <= cb.radius - ca.radius + kGeomEps) {
        // b covers the whole boundary of a (coincident or containing).
        counter.add(keys[b], 1);
        continue;
      }
      const double cos_half =
        std::clamp((d * d + ca.radius * ca.radius - cb.radius * cb.radius) / (2.0 * ca.radius * d), -1.0, 1.0);
      const double half = std::acos(cos_half);
      const double dir = std::atan2(delta.y(), delta.x());
      arcs.push_back({dir - half, 2.0 * half, keys[b]});
    }

    if (arcs.empty()) {
      const auto [p, value] = isolated(a);
      offer(p, value);
      continue;
    }

    // Start the sweep in the middle of the widest gap between crossings so
    // that no vertex straddles the 0/2π seam.
    angles.clear();
    for (const Arc& arc : arcs) {
      angles.push_back(normalize_angle(arc.start));
      angles.push_back(normalize_angle(arc.start + arc.length));
    }
    std::sort(angles.begin(), angles.end());
    double gap = angles.front() + kTwoPi - angles.back();
    double origin = angles.back() + gap / 2.0;
    for (std::size_t k = 1; k < angles.size(); ++k) {
      if (angles[k] - angles[k - 1] > gap) {
        gap = angles[k] - angles[k - 1];
        origin = angles[k - 1] + gap / 2.0;
      }
    }

    events.clear();
    for (const Arc& arc : arcs) {
      const double s = normalize_angle(arc.start - origin);
      const double e = s + arc.length;
      if (e >= kTwoPi) {
        counter.add(arc.key, 1);
        events.push_back({e - kTwoPi, -1, arc.key});
      } else {
        events.push_back({e, -1, arc.key});
      }
      events.push_back({s, +1, arc.key});
    }
    std::sort(events.begin(), events.end(), [](const Event& x, const Event& y) {
      return x.angle < y.angle || (x.angle == y.angle && x.delta > y.delta);
    });

    std::size_t k = 0;
    while (k < events.size()) {
      const double group_angle = events[k].angle;
      std::size_t end = k;
      while (end < events.size() && events[end].angle - group_angle <= kAngleTol) {
        ++end;
      }
      for (std::size_t m = k; m < end; ++m) {
        if (events[m].delta > 0) {
          counter.add(events[m].key, 1);
        }
      }
      const double theta = group_angle + origin;
      const Point p = ca.center + ca.radius * Point(std::cos(theta), std::sin(theta));
      if (accept(p)) {
        offer(p, counter.nonzero());
      }
      for (std::size_t m = k; m < end; ++m) {
        if (events[m].delta < 0) {
          counter.add(events[m].key, -1);
        }
      }
      k = end;
    }
  }

  if (collect) {
    std::sort(result.best_points.begin(), result.best_points.end(), lex_less);
  }
  return result;
}

struct DenseKeys
{
  std::vector<int> keys;
  std::vector<LatticeIndex> translates;
};

DenseKeys dense_translate_keys(std::span<const TranslatedCircle> circles)
{
  DenseKeys out;
  std::map<LatticeIndex, int> ids;
  out.keys.reserve(circles.size());
  for (const TranslatedCircle& c : circles) {
    auto [it, inserted] = ids.try_emplace(c.translate, static_cast<int>(out.translates.size()));
    if (inserted) {
      out.translates.push_back(c.translate);
    }
    out.keys.push_back(it->second);
  }
  return out;
}

SweepResult sweep_translates(std::span<const TranslatedCircle> circles, const LatticeFrame& frame, bool collect)
{
  if (circles.empty()) {
    throw std::invalid_argument("max_distinct_translate_depth: no circles");
  }
  const DenseKeys dense = dense_translate_keys(circles);
  std::vector<Circle> plain;
  plain.reserve(circles.size());
  for (const TranslatedCircle& c : circles) {
    plain.push_back(c.circle);
  }
  auto accept = [&](const Point& p) { return frame.in_closed_cell(p); };
  auto isolated = [&](std::size_t a) {
    const Point p = wrap_to_cell(plain[a].center, frame).cell_point;
    return std::pair{p, distinct_depth_at(circles, p).distinct_translates};
  };
  return sweep_max(plain, dense.keys, static_cast<int>(dense.translates.size()), accept, isolated, collect);
}

} // namespace

std::vector<TranslatedCircle> translate_to_cell(const DiskSet& disks, const LatticeFrame& frame)
{
  disks.validate();
  Eigen::Matrix2d basis;
  basis.col(0) = frame.u;
  basis.col(1) = frame.v;
  const Eigen::Matrix2d inv = basis.inverse();
  const double rs = disks.radius * inv.row(0).norm();
  const double rt = disks.radius * inv.row(1).norm();

  std::vector<TranslatedCircle> out;
  for (std::size_t k = 0; k < disks.centers.size(); ++k) {
    const Point& c = disks.centers[k];
    const Point st = frame.coords(c);
    for (int j = static_cast<int>(std::floor(st.y() - rt)); j <= static_cast<int>(std::floor(st.y() + rt)); ++j) {
      for (int i = static_cast<int>(std::floor(st.x() - rs)); i <= static_cast<int>(std::floor(st.x() + rs));
           ++i) {
        const LatticeIndex idx{i, j};
        if (frame.distance_to_cell(c, idx) <= disks.radius) {
          out.push_back({{c - i * frame.u - j * frame.v, disks.radius}, idx, k});
        }
      }
    }
  }
  return out;
}

std::vector<TranslatedCircle> translate_to_cell(const DiskSet& disks, const TriLattice& lattice)
{
  return translate_to_cell(disks, lattice.frame());
}

DepthWitness distinct_depth_at(std::span<const TranslatedCircle> circles, const Point& p, double eps)
{
  DepthWitness w;
  w.point = p;
  for (const TranslatedCircle& c : circles) {
    if (c.circle.contains(p, eps)) {
      ++w.per_translate_counts[c.translate];
    }
  }
  w.distinct_translates = static_cast<int>(w.per_translate_counts.size());
  return w;
}

DepthWitness max_distinct_translate_depth(std::span<const TranslatedCircle> circles, const LatticeFrame& frame)
{
  const SweepResult r = sweep_translates(circles, frame, false);
  return distinct_depth_at(circles, r.best_point);
}

std::vector<Point> max_depth_candidates(std::span<const TranslatedCircle> circles, const LatticeFrame& frame)
{
  return sweep_translates(circles, frame, true).best_points;
}

int depth_at(std::span<const Circle> circles, const Point& p, double eps)
{
  return static_cast<int>(
    std::count_if(circles.begin(), circles.end(), [&](const Circle& c) { return c.contains(p, eps); }));
}

DepthPoint max_depth(std::span<const Circle> circles)
{
  if (circles.empty()) {
    throw std::invalid_argument("max_depth: no circles");
  }
  std::vector<int> keys(circles.size());
  for (std::size_t k = 0; k < keys.size(); ++k) {
    keys[k] = static_cast<int>(k);
  }
  auto accept = [](const Point&) { return true; };
  auto isolated = [&](std::size_t a) {
    return std::pair{circles[a].center, depth_at(circles, circles[a].center)};
  };
  const SweepResult r = sweep_max(circles, keys, static_cast<int>(circles.size()), accept, isolated, false);
  return {r.best_point, depth_at(circles, r.best_point)};
}

} // namespace diskpack
