#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <numbers>

#include "sumprod/errors.hpp"
#include "sumprod/geometry.hpp"

namespace sumprod {

namespace {

constexpr int kCapSteps = 64;

Polygon2<double> polygon_of(const DeltaTube& t) { return stadium_polygon<double>(t.p0, t.p1, t.radius, kCapSteps); }

// Upper bound on |a ∩ b| from the line parameters, or nullopt when either
// tube is vertical. Every point of a tube lies within vertical distance
// r·sqrt(1 + s²) of its line and inside its x-extent widened by r, so the
// overlap sits over the x-window where the two lines are within the sum of
// those distances; any vertical chord of a tube is at most 2r·sqrt(1 + s²).
std::optional<double> overlap_upper_bound(const DeltaTube& a, const DeltaTube& b) {
  if (!a.slope || !b.slope) return std::nullopt;
  const double ka = std::sqrt(1.0 + *a.slope * *a.slope);
  const double kb = std::sqrt(1.0 + *b.slope * *b.slope);
  double lo = std::max(a.x_min() - a.radius, b.x_min() - b.radius);
  double hi = std::min(a.x_max() + a.radius, b.x_max() + b.radius);
  if (hi < lo) return 0.0;
  const double h = a.radius * ka + b.radius * kb;
  const double ds = *b.slope - *a.slope;
  const double db = *b.intercept - *a.intercept;
  if (ds == 0.0) {
    if (std::abs(db) > h) return 0.0;
  } else {
    double x0 = (-h - db) / ds;
    double x1 = (h - db) / ds;
    if (x1 < x0) std::swap(x0, x1);
    lo = std::max(lo, x0);
    hi = std::min(hi, x1);
    if (hi < lo) return 0.0;
  }
  const double chord = 2.0 * std::min(a.radius * ka, b.radius * kb);
  return (hi - lo) * chord;
}

}  // namespace

double tube_area(const DeltaTube& t) {
  return 2.0 * t.radius * t.length() + std::numbers::pi * t.radius * t.radius;
}

double tube_polygon_area(const DeltaTube& t) { return polygon_area(polygon_of(t)); }

double tube_overlap_area(const DeltaTube& a, const DeltaTube& b) {
  const auto clipped = clip_convex(polygon_of(a), polygon_of(b));
  return std::max(0.0, polygon_area(clipped));
}

double overlap_fraction(const DeltaTube& a, const DeltaTube& b) {
  return tube_overlap_area(a, b) / std::min(tube_polygon_area(a), tube_polygon_area(b));
}

bool essentially_distinct_by_area(const DeltaTube& a, const DeltaTube& b) { return overlap_fraction(a, b) <= 0.5; }

namespace {

// Polygon areas are at least this fraction of the exact stadium area: the
// inscribed caps lose at most a (1 - sin(θ)/θ) share of the disc, θ = π/steps.
double polygon_area_floor(const DeltaTube& t) {
  const double theta = std::numbers::pi / kCapSteps;
  const double disc_share = std::sin(theta) / theta;
  return 2.0 * t.radius * t.length() + std::numbers::pi * t.radius * t.radius * disc_share * (1.0 - 1e-9);
}

enum class Verdict { Distinct, NeedsArea };

Verdict quick_verdict(const DeltaTube& a, const DeltaTube& b) {
  const auto bound = overlap_upper_bound(a, b);
  if (!bound) return Verdict::NeedsArea;
  const double half = 0.5 * std::min(polygon_area_floor(a), polygon_area_floor(b));
  return *bound <= half * (1.0 - 1e-9) ? Verdict::Distinct : Verdict::NeedsArea;
}

}  // namespace

bool essentially_distinct_pair(const DeltaTube& a, const DeltaTube& b) {
  if (quick_verdict(a, b) == Verdict::Distinct) return true;
  return essentially_distinct_by_area(a, b);
}

DistinctnessResult essentially_distinct_tubes(std::span<const DeltaTube> tubes, bool stop_at_first) {
  DistinctnessResult result;
  if (tubes.empty()) return result;
  const double radius = tubes.front().radius;
  bool all_sloped = true;
  double max_k = 1.0;
  double min_area = std::numeric_limits<double>::infinity();
  for (const auto& t : tubes) {
    if (t.radius != radius) throw InvalidArgument("essentially_distinct_tubes: tubes have mixed radii");
    if (!t.slope) {
      all_sloped = false;
      continue;
    }
    max_k = std::max(max_k, std::sqrt(1.0 + *t.slope * *t.slope));
    min_area = std::min(min_area, polygon_area_floor(t));
  }

  auto check = [&](std::size_t i, std::size_t j) {
    if (quick_verdict(tubes[i], tubes[j]) == Verdict::Distinct) return true;
    ++result.area_checks;
    const double frac = overlap_fraction(tubes[i], tubes[j]);
    result.worst_overlap_fraction = std::max(result.worst_overlap_fraction, frac);
    if (frac <= 0.5) return true;
    ++result.violations;
    if (result.distinct) {
      result.distinct = false;
      result.violation = std::make_pair(std::min(i, j), std::max(i, j));
    }
    return !stop_at_first;
  };

  if (!all_sloped) {
    for (std::size_t i = 0; i < tubes.size(); ++i)
      for (std::size_t j = i + 1; j < tubes.size(); ++j)
        if (!check(i, j)) return result;
    return result;
  }

  // Beyond this slope gap the window bound (2h/Δs)·chord is already below half
  // the smallest tube, so the slope-sorted sweep can stop early.
  const double h = 2.0 * radius * max_k;
  const double chord = 2.0 * radius * max_k;
  const double cutoff = 2.0 * h * chord / (0.5 * min_area) * (1.0 + 1e-6);

  std::vector<std::size_t> order(tubes.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return *tubes[x].slope < *tubes[y].slope; });
  for (std::size_t p = 0; p < order.size(); ++p) {
    const double s = *tubes[order[p]].slope;
    for (std::size_t q = p + 1; q < order.size(); ++q) {
      if (*tubes[order[q]].slope - s > cutoff) break;
      if (!check(order[p], order[q])) return result;
    }
  }
  return result;
}

}  // namespace sumprod
