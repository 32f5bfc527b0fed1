#include "sumprod/geometry.hpp"

#include <cmath>
#include <cstdint>
#include <string>
#include <unordered_map>

#include "sumprod/errors.hpp"

namespace sumprod {

DeltaTube DeltaTube::make(const Point& p0, const Point& p1, double radius) {
  if (!(radius > 0.0)) throw InvalidArgument("tube: radius must be positive");
  if (p0 == p1) throw InvalidArgument("tube: degenerate segment");
  const double len = (p1 - p0).norm();
  if (len > 8.0) throw InvalidArgument("tube: segment length " + std::to_string(len) + " exceeds 8");
  DeltaTube t;
  t.p0 = p0;
  t.p1 = p1;
  t.radius = radius;
  if (p1.x() != p0.x()) {
    t.slope = (p1.y() - p0.y()) / (p1.x() - p0.x());
    t.intercept = p0.y() - *t.slope * p0.x();
  }
  return t;
}

DeltaTube tube_from_line(double a_i, double a_j, double delta) {
  if (!(delta > 0.0)) throw InvalidArgument("tube_from_line: delta must be positive");
  DeltaTube t;
  t.p0 = Point(0.0, -a_j * a_i);
  t.p1 = Point(4.0, a_j * (4.0 - a_i));
  t.radius = delta;
  t.slope = a_j;
  t.intercept = -a_i * a_j;
  return t;
}

WellSpacingReport well_spaced_check(std::span<const DeltaTube> tubes, const WellSpacingParams& params) {
  if (!(params.w > 0.0)) throw InvalidArgument("well_spaced_check: W must be positive");
  struct KeyHash {
    std::size_t operator()(const std::pair<std::int64_t, std::int64_t>& k) const noexcept {
      return std::hash<std::int64_t>{}(k.first * 0x9E3779B97F4A7C15ULL ^ k.second);
    }
  };
  std::unordered_map<std::pair<std::int64_t, std::int64_t>, std::size_t, KeyHash> cells;
  cells.reserve(tubes.size());
  WellSpacingReport report;
  for (const auto& t : tubes) {
    std::pair<std::int64_t, std::int64_t> key;
    if (t.slope) {
      key = {static_cast<std::int64_t>(std::floor(*t.slope * params.w)),
             static_cast<std::int64_t>(std::floor(*t.intercept * params.w))};
    } else {
      // vertical tubes get their own column of cells keyed by x position
      key = {INT64_MAX, static_cast<std::int64_t>(std::floor(t.p0.x() * params.w))};
    }
    report.max_occupancy = std::max(report.max_occupancy, ++cells[key]);
  }
  report.passes = report.max_occupancy <= params.max_per_cell;
  return report;
}

std::vector<DeltaBall> ball_lattice(const Box& region, double delta) {
  if (!(delta > 0.0)) throw InvalidArgument("ball_lattice: delta must be positive");
  if (region.x_max < region.x_min || region.y_max < region.y_min)
    throw InvalidArgument("ball_lattice: empty region");
  const double step = delta / 2.0;
  const double area = (region.x_max - region.x_min) * (region.y_max - region.y_min);
  if (area / (step * step) > 1e9) throw TooLargeError("ball_lattice: more than 1e9 lattice cells requested");
  const auto ix0 = static_cast<std::int64_t>(std::ceil(region.x_min / step));
  const auto ix1 = static_cast<std::int64_t>(std::floor(region.x_max / step));
  const auto iy0 = static_cast<std::int64_t>(std::ceil(region.y_min / step));
  const auto iy1 = static_cast<std::int64_t>(std::floor(region.y_max / step));
  std::vector<DeltaBall> balls;
  if (ix1 < ix0 || iy1 < iy0) return balls;
  balls.reserve(static_cast<std::size_t>((ix1 - ix0 + 1) * (iy1 - iy0 + 1)));
  for (auto ix = ix0; ix <= ix1; ++ix)
    for (auto iy = iy0; iy <= iy1; ++iy)
      balls.push_back({Point(static_cast<double>(ix) * step, static_cast<double>(iy) * step), delta});
  return balls;
}

}  // namespace sumprod
