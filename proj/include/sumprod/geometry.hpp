#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sumprod/primitives.hpp"

namespace sumprod {

using Point = Point2<double>;

/// Relative padding of the closed tube predicate: a centre at distance
/// <= radius·(1 + kContainmentTolerance) from the core segment is inside.
inline constexpr double kContainmentTolerance = 1e-9;

/// Closed δ-neighbourhood (stadium) of a segment of length at most 8.
struct DeltaTube {
  Point p0 = Point::Zero();
  Point p1 = Point::Zero();
  double radius = 0.0;
  /// Line parameters y = slope·x + intercept; empty for vertical segments.
  std::optional<double> slope;
  std::optional<double> intercept;

  /// Validating constructor: p0 != p1, radius > 0, length <= 8.
  static DeltaTube make(const Point& p0, const Point& p1, double radius);

  double length() const { return (p1 - p0).norm(); }
  double x_min() const { return std::min(p0.x(), p1.x()); }
  double x_max() const { return std::max(p0.x(), p1.x()); }
};

struct DeltaBall {
  Point center = Point::Zero();
  double radius = 0.0;
};

/// Neighbourhood of y = a_j(x - a_i) over 0 <= x <= 4.
DeltaTube tube_from_line(double a_i, double a_j, double delta);

inline bool tube_contains(const DeltaTube& t, const Point& p) {
  const double reach = t.radius * (1.0 + kContainmentTolerance);
  return segment_distance_squared<double>(p, t.p0, t.p1) <= reach * reach;
}

/// Exact stadium area 2·r·length + π·r².
double tube_area(const DeltaTube& t);

/// Area of the intersection of two tubes, computed on inscribed polygons.
double tube_overlap_area(const DeltaTube& a, const DeltaTube& b);

/// Area of the inscribed polygon used by tube_overlap_area.
double tube_polygon_area(const DeltaTube& t);

/// Reference criterion: the polygonal overlap is at most half of the smaller
/// polygonal tube area.
bool essentially_distinct_by_area(const DeltaTube& a, const DeltaTube& b);

/// Same decision as essentially_distinct_by_area, settled by a conservative
/// slope/intercept bound when possible and by the area computation otherwise.
bool essentially_distinct_pair(const DeltaTube& a, const DeltaTube& b);

struct DistinctnessResult {
  bool distinct = true;
  std::optional<std::pair<std::size_t, std::size_t>> violation;
  /// Pairs that needed the polygon-area fallback.
  std::size_t area_checks = 0;
  /// Pairs overlapping by more than half (only counted past the first when
  /// the scan does not stop early).
  std::size_t violations = 0;
  /// Largest overlap / smaller-area ratio among the area-checked pairs.
  double worst_overlap_fraction = 0.0;
};

/// Checks every pair of a family; throws InvalidArgument on mixed radii.
DistinctnessResult essentially_distinct_tubes(std::span<const DeltaTube> tubes, bool stop_at_first = true);

/// |a ∩ b| / min(|a|, |b|) on the inscribed polygons.
double overlap_fraction(const DeltaTube& a, const DeltaTube& b);

struct WellSpacingParams {
  double w = 1.0;
  std::size_t max_per_cell = 1;
};

struct WellSpacingReport {
  std::size_t max_occupancy = 0;
  bool passes = true;
};

/// Buckets tubes into W⁻¹ × W⁻¹ cells of (slope, intercept) space and
/// reports the largest bucket.
WellSpacingReport well_spaced_check(std::span<const DeltaTube> tubes, const WellSpacingParams& params);

struct Box {
  double x_min = 0.0, x_max = 0.0, y_min = 0.0, y_max = 0.0;
};

/// All δ-balls centred at points of (δ/2)Z² inside the closed box.
std::vector<DeltaBall> ball_lattice(const Box& region, double delta);

}  // namespace sumprod
