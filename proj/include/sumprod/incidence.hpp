#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "sumprod/geometry.hpp"

namespace sumprod {

/// Dyadic richness bins: bins[i] counts objects with richness in [2^i, 2^(i+1)).
struct RichnessHistogram {
  std::vector<std::size_t> bins;
  std::uint64_t total_incidences = 0;

  static RichnessHistogram from(std::span<const std::uint32_t> richness);

  /// Objects with richness >= 1.
  std::size_t incident_objects() const;
  /// Count in the bin starting at 2^i, 0 past the last bin.
  std::size_t at(std::size_t i) const { return i < bins.size() ? bins[i] : 0; }
};

struct IncidenceReport {
  std::uint64_t incidences = 0;
  std::vector<std::uint32_t> per_tube_richness;
  std::vector<std::uint32_t> per_ball_richness;
  RichnessHistogram ball_histogram;
  RichnessHistogram tube_histogram;

  static IncidenceReport from_richness(std::vector<std::uint32_t> per_tube, std::vector<std::uint32_t> per_ball);
};

/// Tests every (tube, ball) pair. Throws TooLargeError past 1e8 pairs.
IncidenceReport count_incidences_bruteforce(std::span<const DeltaTube> tubes, std::span<const DeltaBall> balls);

/// Grid-accelerated counter returning the same report as the brute-force one.
/// Ball centres are bucketed in square cells of side max(δ, extent/4096) and
/// each tube only visits the cells its neighbourhood can reach. `threads` = 0
/// picks the hardware concurrency.
IncidenceReport count_incidences(std::span<const DeltaTube> tubes, std::span<const DeltaBall> balls,
                                 unsigned threads = 0);

/// Report of tubes [a] followed by tubes [b] against the same balls.
IncidenceReport merge_reports(const IncidenceReport& a, const IncidenceReport& b);

enum class Side { Tubes, Balls };

/// |P_r|: objects on `side` whose richness lies in [r, 2r). Requires r >= 1.
std::size_t rich_objects(const IncidenceReport& report, std::uint64_t r, Side side);

/// Objects on `side` with richness >= r.
std::size_t at_least_rich(const IncidenceReport& report, std::uint64_t r, Side side);

/// Text form: a header with |T|, |B|, δ, W and the incidence total, then one
/// `r=<2^i> P_r_balls=<count> P_r_tubes=<count>` line per dyadic bin.
void write_incidence_report(std::ostream& os, const IncidenceReport& report, double delta, double w);

}  // namespace sumprod
