#include "sumprod/incidence.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <ostream>
#include <string>
#include <thread>

#include "sumprod/errors.hpp"

namespace sumprod {

RichnessHistogram RichnessHistogram::from(std::span<const std::uint32_t> richness) {
  RichnessHistogram h;
  for (std::uint32_t r : richness) {
    h.total_incidences += r;
    if (r == 0) continue;
    const auto bin = static_cast<std::size_t>(std::bit_width(r) - 1);
    if (h.bins.size() <= bin) h.bins.resize(bin + 1, 0);
    ++h.bins[bin];
  }
  return h;
}

std::size_t RichnessHistogram::incident_objects() const {
  std::size_t n = 0;
  for (auto c : bins) n += c;
  return n;
}

IncidenceReport IncidenceReport::from_richness(std::vector<std::uint32_t> per_tube, std::vector<std::uint32_t> per_ball) {
  IncidenceReport r;
  r.per_tube_richness = std::move(per_tube);
  r.per_ball_richness = std::move(per_ball);
  r.tube_histogram = RichnessHistogram::from(r.per_tube_richness);
  r.ball_histogram = RichnessHistogram::from(r.per_ball_richness);
  r.incidences = r.tube_histogram.total_incidences;
  return r;
}

IncidenceReport count_incidences_bruteforce(std::span<const DeltaTube> tubes, std::span<const DeltaBall> balls) {
  if (static_cast<double>(tubes.size()) * static_cast<double>(balls.size()) > 1e8)
    throw TooLargeError("count_incidences_bruteforce: " + std::to_string(tubes.size()) + " tubes x " +
                        std::to_string(balls.size()) + " balls exceeds 1e8 pairs");
  std::vector<std::uint32_t> per_tube(tubes.size(), 0);
  std::vector<std::uint32_t> per_ball(balls.size(), 0);
  for (std::size_t t = 0; t < tubes.size(); ++t) {
    for (std::size_t b = 0; b < balls.size(); ++b) {
      if (tube_contains(tubes[t], balls[b].center)) {
        ++per_tube[t];
        ++per_ball[b];
      }
    }
  }
  return IncidenceReport::from_richness(std::move(per_tube), std::move(per_ball));
}

namespace {

// Ball centres bucketed column-major: all cells of column cx are contiguous,
// so a tube's visit to a column is a single index range.
struct BallGrid {
  double x0 = 0.0, y0 = 0.0, cell = 1.0;
  std::int64_t nx = 0, ny = 0;
  std::vector<std::size_t> start;  // nx*ny + 1 offsets
  std::vector<double> xs, ys;      // centres in bucket order
  std::vector<std::size_t> id;     // original ball index per bucket slot

  std::int64_t col(double x) const { return static_cast<std::int64_t>(std::floor((x - x0) / cell)); }
  std::int64_t row(double y) const { return static_cast<std::int64_t>(std::floor((y - y0) / cell)); }
};

BallGrid build_grid(std::span<const DeltaBall> balls, double radius) {
  BallGrid g;
  double x1 = balls.front().center.x(), y1 = balls.front().center.y();
  g.x0 = x1;
  g.y0 = y1;
  for (const auto& b : balls) {
    g.x0 = std::min(g.x0, b.center.x());
    g.y0 = std::min(g.y0, b.center.y());
    x1 = std::max(x1, b.center.x());
    y1 = std::max(y1, b.center.y());
  }
  const double extent = std::max(x1 - g.x0, y1 - g.y0);
  g.cell = std::max(radius, extent / 4096.0);
  if (!(g.cell > 0.0)) g.cell = 1.0;
  g.nx = g.col(x1) + 1;
  g.ny = g.row(y1) + 1;

  const auto cells = static_cast<std::size_t>(g.nx * g.ny);
  std::vector<std::size_t> slot(balls.size());
  g.start.assign(cells + 1, 0);
  for (std::size_t i = 0; i < balls.size(); ++i) {
    const auto cx = std::clamp<std::int64_t>(g.col(balls[i].center.x()), 0, g.nx - 1);
    const auto cy = std::clamp<std::int64_t>(g.row(balls[i].center.y()), 0, g.ny - 1);
    slot[i] = static_cast<std::size_t>(cx * g.ny + cy);
    ++g.start[slot[i] + 1];
  }
  for (std::size_t c = 0; c < cells; ++c) g.start[c + 1] += g.start[c];
  std::vector<std::size_t> fill(g.start.begin(), g.start.end() - 1);
  g.xs.resize(balls.size());
  g.ys.resize(balls.size());
  g.id.resize(balls.size());
  for (std::size_t i = 0; i < balls.size(); ++i) {
    const std::size_t pos = fill[slot[i]]++;
    g.xs[pos] = balls[i].center.x();
    g.ys[pos] = balls[i].center.y();
    g.id[pos] = i;
  }
  return g;
}

// Counts the balls of `g` inside `t`, bumping `hits` (bucket order).
std::uint32_t scan_tube(const BallGrid& g, const DeltaTube& t, std::vector<std::uint32_t>& hits) {
  const double reach = t.radius * (1.0 + kContainmentTolerance);
  const double pad = 1e-9 * (g.cell + reach);
  const double margin = reach + pad;
  const auto c_lo = std::max<std::int64_t>(g.col(t.x_min() - margin), 0);
  const auto c_hi = std::min<std::int64_t>(g.col(t.x_max() + margin), g.nx - 1);
  const double dx = t.p1.x() - t.p0.x();
  const double dy = t.p1.y() - t.p0.y();
  std::uint32_t count = 0;
  for (auto cx = c_lo; cx <= c_hi; ++cx) {
    const double slab_lo = g.x0 + static_cast<double>(cx) * g.cell - pad - reach;
    const double slab_hi = g.x0 + static_cast<double>(cx + 1) * g.cell + pad + reach;
    double t_lo = 0.0, t_hi = 1.0;
    if (dx == 0.0) {
      if (t.p0.x() < slab_lo || t.p0.x() > slab_hi) continue;
    } else {
      double ta = (slab_lo - t.p0.x()) / dx;
      double tb = (slab_hi - t.p0.x()) / dx;
      if (tb < ta) std::swap(ta, tb);
      t_lo = std::max(0.0, ta);
      t_hi = std::min(1.0, tb);
      if (t_hi < t_lo) continue;
    }
    const double ya = t.p0.y() + t_lo * dy;
    const double yb = t.p0.y() + t_hi * dy;
    const auto r_lo = std::max<std::int64_t>(g.row(std::min(ya, yb) - margin), 0);
    const auto r_hi = std::min<std::int64_t>(g.row(std::max(ya, yb) + margin), g.ny - 1);
    if (r_hi < r_lo) continue;
    const auto base = static_cast<std::size_t>(cx * g.ny);
    const std::size_t b_end = g.start[base + static_cast<std::size_t>(r_hi) + 1];
    for (std::size_t b = g.start[base + static_cast<std::size_t>(r_lo)]; b < b_end; ++b) {
      if (tube_contains(t, Point(g.xs[b], g.ys[b]))) {
        ++hits[b];
        ++count;
      }
    }
  }
  return count;
}

}  // namespace

IncidenceReport count_incidences(std::span<const DeltaTube> tubes, std::span<const DeltaBall> balls,
                                 unsigned threads) {
  std::vector<std::uint32_t> per_tube(tubes.size(), 0);
  std::vector<std::uint32_t> per_ball(balls.size(), 0);
  if (tubes.empty() || balls.empty()) return IncidenceReport::from_richness(std::move(per_tube), std::move(per_ball));

  double radius = 0.0;
  for (const auto& t : tubes) radius = std::max(radius, t.radius);
  const BallGrid grid = build_grid(balls, radius);

  if (threads == 0) threads = std::clamp(std::thread::hardware_concurrency(), 1u, 8u);
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, (tubes.size() + 63) / 64));
  threads = std::max(threads, 1u);

  constexpr std::size_t kBlock = 64;
  std::atomic<std::size_t> next{0};
  std::vector<std::vector<std::uint32_t>> partial(threads, std::vector<std::uint32_t>(balls.size(), 0));
  auto work = [&](unsigned w) {
    auto& hits = partial[w];
    for (;;) {
      const std::size_t begin = next.fetch_add(kBlock);
      if (begin >= tubes.size()) break;
      const std::size_t end = std::min(tubes.size(), begin + kBlock);
      for (std::size_t i = begin; i < end; ++i) per_tube[i] = scan_tube(grid, tubes[i], hits);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }
  for (const auto& hits : partial)
    for (std::size_t b = 0; b < hits.size(); ++b) per_ball[grid.id[b]] += hits[b];
  return IncidenceReport::from_richness(std::move(per_tube), std::move(per_ball));
}

IncidenceReport merge_reports(const IncidenceReport& a, const IncidenceReport& b) {
  if (a.per_ball_richness.size() != b.per_ball_richness.size())
    throw InvalidArgument("merge_reports: reports were counted against different ball sets");
  std::vector<std::uint32_t> per_tube = a.per_tube_richness;
  per_tube.insert(per_tube.end(), b.per_tube_richness.begin(), b.per_tube_richness.end());
  std::vector<std::uint32_t> per_ball = a.per_ball_richness;
  for (std::size_t i = 0; i < per_ball.size(); ++i) per_ball[i] += b.per_ball_richness[i];
  return IncidenceReport::from_richness(std::move(per_tube), std::move(per_ball));
}

namespace {
const std::vector<std::uint32_t>& side_of(const IncidenceReport& r, Side side) {
  return side == Side::Tubes ? r.per_tube_richness : r.per_ball_richness;
}
}  // namespace

std::size_t rich_objects(const IncidenceReport& report, std::uint64_t r, Side side) {
  if (r < 1) throw InvalidArgument("rich_objects: r must be >= 1");
  const auto& v = side_of(report, side);
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [r](std::uint32_t x) { return x >= r && x < 2 * r; }));
}

std::size_t at_least_rich(const IncidenceReport& report, std::uint64_t r, Side side) {
  const auto& v = side_of(report, side);
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [r](std::uint32_t x) { return x >= r; }));
}

void write_incidence_report(std::ostream& os, const IncidenceReport& report, double delta, double w) {
  os << "tubes=" << report.per_tube_richness.size() << '\n'
     << "balls=" << report.per_ball_richness.size() << '\n'
     << "delta=" << delta << '\n'
     << "W=" << w << '\n'
     << "incidences=" << report.incidences << '\n';
  const std::size_t bins = std::max(report.ball_histogram.bins.size(), report.tube_histogram.bins.size());
  for (std::size_t i = 0; i < bins; ++i) {
    os << "r=" << (std::uint64_t{1} << i) << " P_r_balls=" << report.ball_histogram.at(i)
       << " P_r_tubes=" << report.tube_histogram.at(i) << '\n';
  }
}

}  // namespace sumprod
