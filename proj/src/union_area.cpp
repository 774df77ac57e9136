#include "diskpack/union_area.hpp"

#include "diskpack/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

namespace diskpack {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Interval
{
  double lo;
  double hi;
};

// Contribution of the counterclockwise arc [phi1, phi2] of circle c to
// ½∮(x dy − y dx).
double arc_term(const Circle& c, double phi1, double phi2)
{
  const double r = c.radius;
  return 0.5 * (r * r * (phi2 - phi1) +
                r * (c.center.x() * (std::sin(phi2) - std::sin(phi1)) -
                     c.center.y() * (std::cos(phi2) - std::cos(phi1))));
}

} // namespace

std::vector<Circle> DiskSet::circles() const
{
  std::vector<Circle> out;
  out.reserve(centers.size());
  for (const Point& c : centers) {
    out.push_back({c, radius});
  }
  return out;
}

void DiskSet::validate() const
{
  if (!(std::isfinite(radius) && radius > 0.0)) {
    throw std::invalid_argument("disk radius must be finite and positive");
  }
  for (const Point& c : centers) {
    require_finite(c, "disk center");
  }
}

double exact_union_area(const std::vector<Circle>& input)
{
  // Exact duplicates would cover each other's whole boundary.
  std::vector<Circle> circles;
  circles.reserve(input.size());
  for (const Circle& c : input) {
    if (!(std::isfinite(c.radius) && c.radius >= 0.0) || !is_finite(c.center)) {
      throw std::invalid_argument("exact_union_area: invalid circle");
    }
    if (c.radius == 0.0) {
      continue;
    }
    const bool dup = std::any_of(circles.begin(), circles.end(), [&](const Circle& o) {
      return o.center == c.center && o.radius == c.radius;
    });
    if (!dup) {
      circles.push_back(c);
    }
  }

  double area = 0.0;
  std::vector<Interval> covered;
  for (std::size_t a = 0; a < circles.size(); ++a) {
    const Circle& ca = circles[a];
    covered.clear();
    bool swallowed = false;
    for (std::size_t b = 0; b < circles.size() && !swallowed; ++b) {
      if (b == a) {
        continue;
      }
      const Circle& cb = circles[b];
      const Point delta = cb.center - ca.center;
      const double d = delta.norm();
      if (d >= ca.radius + cb.radius || d + cb.radius <= ca.radius) {
        continue;
      }
      if (d + ca.radius <= cb.radius) {
        swallowed = true;
        break;
      }
      const double cos_half =
        std::clamp((d * d + ca.radius * ca.radius - cb.radius * cb.radius) / (2.0 * ca.radius * d), -1.0, 1.0);
      const double half = std::acos(cos_half);
      double lo = std::atan2(delta.y(), delta.x()) - half;
      lo = std::fmod(lo, kTwoPi);
      if (lo < 0) {
        lo += kTwoPi;
      }
      const double hi = lo + 2.0 * half;
      if (hi > kTwoPi) {
        covered.push_back({lo, kTwoPi});
        covered.push_back({0.0, hi - kTwoPi});
      } else {
        covered.push_back({lo, hi});
      }
    }
    if (swallowed) {
      continue;
    }
    std::sort(covered.begin(), covered.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
    // Walk the uncovered gaps of [0, 2π).
    double cursor = 0.0;
    for (const Interval& iv : covered) {
      if (iv.lo > cursor) {
        area += arc_term(ca, cursor, iv.lo);
      }
      cursor = std::max(cursor, iv.hi);
    }
    if (cursor < kTwoPi) {
      area += arc_term(ca, cursor, kTwoPi);
    }
  }
  return std::max(area, 0.0);
}

double exact_union_area(const DiskSet& disks)
{
  disks.validate();
  return exact_union_area(disks.circles());
}

MonteCarloEstimate monte_carlo_union_area(const DiskSet& disks, std::uint64_t samples, std::uint64_t seed)
{
  disks.validate();
  if (samples < 1) {
    throw std::invalid_argument("monte_carlo_union_area: samples must be at least 1");
  }
  MonteCarloEstimate est;
  est.samples = samples;
  if (disks.empty()) {
    return est;
  }
  const double r = disks.radius;
  Point lo = disks.centers.front();
  Point hi = lo;
  for (const Point& c : disks.centers) {
    lo = lo.cwiseMin(c);
    hi = hi.cwiseMax(c);
  }
  lo.array() -= r;
  hi.array() += r;

  // Bucket centers on a grid of cell size 2r so a sample checks 9 buckets.
  const double cell = 2.0 * r;
  auto key = [&](long long gx, long long gy) { return (gx << 32) ^ (gy & 0xffffffffLL); };
  std::unordered_map<long long, std::vector<std::size_t>> buckets;
  for (std::size_t k = 0; k < disks.size(); ++k) {
    const auto gx = static_cast<long long>(std::floor((disks.centers[k].x() - lo.x()) / cell));
    const auto gy = static_cast<long long>(std::floor((disks.centers[k].y() - lo.y()) / cell));
    buckets[key(gx, gy)].push_back(k);
  }

  SplitMix64 rng(seed);
  const double r2 = r * r;
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    const Point p(rng.uniform(lo.x(), hi.x()), rng.uniform(lo.y(), hi.y()));
    const auto gx = static_cast<long long>(std::floor((p.x() - lo.x()) / cell));
    const auto gy = static_cast<long long>(std::floor((p.y() - lo.y()) / cell));
    bool hit = false;
    for (long long dx = -1; dx <= 1 && !hit; ++dx) {
      for (long long dy = -1; dy <= 1 && !hit; ++dy) {
        const auto it = buckets.find(key(gx + dx, gy + dy));
        if (it == buckets.end()) {
          continue;
        }
        for (std::size_t k : it->second) {
          if ((disks.centers[k] - p).squaredNorm() <= r2) {
            hit = true;
            break;
          }
        }
      }
    }
    hits += hit ? 1 : 0;
  }
  const double box = (hi.x() - lo.x()) * (hi.y() - lo.y());
  const double frac = static_cast<double>(hits) / static_cast<double>(samples);
  est.area = box * frac;
  est.standard_error = box * std::sqrt(frac * (1.0 - frac) / static_cast<double>(samples));
  return est;
}

double scaled_union_area(const DiskSet& disks, double r)
{
  if (!(r >= 0.0 && r <= 1.0)) {
    throw std::invalid_argument("scaled_union_area: scale factor must lie in [0, 1]");
  }
  disks.validate();
  if (r == 0.0) {
    return 0.0;
  }
  DiskSet scaled = disks;
  scaled.radius = disks.radius * r;
  return exact_union_area(scaled);
}

} // namespace diskpack
