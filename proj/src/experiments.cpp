#include "sumprod/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sumprod/elekes.hpp"
#include "sumprod/errors.hpp"
#include "sumprod/geometry.hpp"
#include "sumprod/incidence.hpp"
#include "sumprod/set_io.hpp"

namespace sumprod {

const char* family_name(Family f) {
  switch (f) {
    case Family::Ap: return "ap";
    case Family::Jittered: return "jittered";
    case Family::CustomFile: return "custom-file";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  if (name == "ap") return Family::Ap;
  if (name == "jittered") return Family::Jittered;
  if (name == "custom-file") return Family::CustomFile;
  throw InvalidArgument("unknown family '" + name + "' (expected ap, jittered or custom-file)");
}

void ExperimentConfig::validate() const {
  if (!(alpha > 1.0 && alpha <= 1.5)) throw InvalidArgument("config: alpha must lie in (1, 3/2]");
  if (!(fit_eps >= 0.0)) throw InvalidArgument("config: fit_eps must be >= 0");
  if (!(jitter >= 0.0 && jitter < 0.5)) throw InvalidArgument("config: jitter must lie in [0, 1/2)");
  if (family == Family::CustomFile) {
    if (set_file.empty()) throw InvalidArgument("config: family custom-file needs set_file");
    return;
  }
  if (n_list.empty()) throw InvalidArgument("config: n_list is empty");
  for (auto n : n_list)
    if (n < 4) throw InvalidArgument("config: every n must be >= 4, got " + std::to_string(n));
}

SeparatedSet make_family(const ExperimentConfig& cfg, std::size_t n) {
  switch (cfg.family) {
    case Family::Ap: return make_ap(n);
    case Family::Jittered: return make_jittered(n, cfg.jitter, cfg.seed + n);
    case Family::CustomFile: return load_separated_set(cfg.set_file);
  }
  throw InvalidArgument("make_family: unknown family");
}

namespace {

std::vector<std::size_t> sizes_of(const ExperimentConfig& cfg) {
  if (cfg.family == Family::CustomFile) return {0};
  return cfg.n_list;
}

}  // namespace

SweepRow sumprod_row(const SeparatedSet& a, double alpha) {
  const Scale scale = Scale::make(a.size(), alpha);
  SweepRow row;
  row.n = a.size();
  row.alpha = alpha;
  row.delta = scale.delta;
  row.cover_sum = covering_number(sumset(a.values), scale.delta);
  row.cover_prod = covering_number(productset(a.values), scale.delta);
  row.product = static_cast<std::uint64_t>(row.cover_sum) * row.cover_prod;
  row.bound = std::pow(static_cast<double>(row.n), 1.0 + alpha);
  row.ratio = static_cast<double>(row.product) / row.bound;
  return row;
}

SweepResult run_sumprod_sweep(const ExperimentConfig& cfg) {
  cfg.validate();
  SweepResult result;
  for (auto n : sizes_of(cfg)) {
    const SeparatedSet a = make_family(cfg, n);
    result.rows.push_back(sumprod_row(a, cfg.alpha));
  }
  for (const auto& row : result.rows) {
    result.full_size_fraction.push_back(static_cast<double>(std::max(row.cover_sum, row.cover_prod)) * row.delta);
    if (row.ratio < cfg.constant_floor) result.ratio_above_floor = false;
  }
  if (cfg.family == Family::Ap) {
    result.ap_sum_exact = std::all_of(result.rows.begin(), result.rows.end(),
                                      [](const SweepRow& r) { return r.cover_sum == 2 * r.n - 1; });
  }
  if (result.rows.size() >= 3) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& r : result.rows) pts.emplace_back(static_cast<double>(r.n), static_cast<double>(r.product));
    result.fit = fit_exponent(pts);
    const double target = 1.0 + cfg.alpha;
    const bool lower = result.fit->slope >= target - cfg.fit_eps;
    const bool upper = result.fit->slope <= target + cfg.fit_eps;
    result.slope_ok = cfg.family == Family::Ap ? (lower && upper) : lower;
  }
  return result;
}

ApGpMeasurement measure_apgp(std::size_t n, double alpha, std::optional<double> q) {
  if (n < 1) throw InvalidArgument("measure_apgp: n must be >= 1");
  const Scale scale = Scale::make(n, alpha);
  const double nn = static_cast<double>(n);
  std::vector<double> ap(n);
  for (std::size_t i = 1; i <= n; ++i) ap[i - 1] = static_cast<double>(n + i) / nn;
  const ValueList gp = q ? make_gp(n, *q) : make_gp(n);

  ApGpMeasurement m;
  m.row.n = n;
  m.row.alpha = alpha;
  m.row.delta = scale.delta;
  m.row.q = q.value_or(std::exp2(1.0 / nn));
  m.row.bound_exponent = std::max(alpha - 0.5, (3.0 - alpha) / 2.0);

  std::vector<std::size_t> hits(n, 0);
  for (double g : gp.values) {
    auto it = std::lower_bound(ap.begin(), ap.end(), g);
    bool inside = false;
    // A GP point can be within δ of at most the two AP neighbours around it.
    for (auto cand : {it, it == ap.begin() ? ap.end() : std::prev(it)}) {
      if (cand == ap.end()) continue;
      if (std::abs(*cand - g) <= scale.delta) {
        ++hits[static_cast<std::size_t>(cand - ap.begin())];
        inside = true;
      }
    }
    if (inside) ++m.row.intersection_count;
  }
  m.max_hits_per_ap_point = hits.empty() ? 0 : *std::max_element(hits.begin(), hits.end());
  return m;
}

ApGpResult run_apgp(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.family != Family::Ap)
    throw InvalidArgument("run_apgp: the intersection experiment uses the arithmetic progression family");
  ApGpResult result;
  for (auto n : cfg.n_list) {
    const auto m = measure_apgp(n, cfg.alpha);
    result.rows.push_back(m.row);
    if (m.max_hits_per_ap_point > 1) result.no_double_hits = false;
  }
  if (result.rows.size() >= 3) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& r : result.rows)
      pts.emplace_back(static_cast<double>(r.n), static_cast<double>(r.intersection_count));
    result.fit = fit_exponent(pts);
    result.slope_ok = result.fit->slope <= result.rows.front().bound_exponent + cfg.fit_eps;
  }
  return result;
}

RichnessTable richness_diagnostic(const SeparatedSet& a, double alpha, double fit_eps) {
  RichnessTable table;
  table.alpha = alpha;
  if (a.size() == 0) return table;
  if (a.size() > 128) throw TooLargeError("richness_diagnostic: N must be <= 128 (ball lattice guard)");
  const Scale scale = Scale::make(a.size(), alpha, fit_eps);
  const ElekesSystem sys = build_elekes(snap_to_grid(a, scale.delta), scale);
  table.n = a.size();
  table.delta = scale.delta;
  table.w = sys.w;
  table.threshold = std::max(std::pow(scale.delta, 1.0 - fit_eps) * sys.w * sys.w, 1.0);

  const auto lattice = ball_lattice(Box{0.0, 4.0, -4.0, 8.0}, scale.delta);
  table.lattice_balls = lattice.size();
  const IncidenceReport report = count_incidences(sys.tubes, lattice);
  const auto& hist = report.ball_histogram;

  std::vector<std::size_t> cumulative(hist.bins.size() + 1, 0);
  for (std::size_t i = hist.bins.size(); i-- > 0;) cumulative[i] = cumulative[i + 1] + hist.bins[i];
  for (std::size_t i = 0; i + 1 < cumulative.size(); ++i)
    if (cumulative[i + 1] > cumulative[i]) table.cumulative_nonincreasing = false;

  const double w4 = std::pow(sys.w, 4.0);
  for (std::size_t i = 0; i < hist.bins.size(); ++i) {
    const std::uint64_t r = std::uint64_t{1} << i;
    if (static_cast<double>(r) <= table.threshold) continue;
    RichnessRow row;
    row.r = r;
    row.balls_in_bin = hist.bins[i];
    row.balls_at_least = cumulative[i];
    row.normalized = std::pow(static_cast<double>(r), 3.0) * static_cast<double>(row.balls_in_bin) / w4;
    if (!table.rows.empty() && row.balls_in_bin > table.rows.back().balls_in_bin) table.bins_nonincreasing = false;
    table.rows.push_back(row);
  }
  return table;
}

std::vector<RichnessTable> run_richness_diagnostic(const ExperimentConfig& cfg) {
  cfg.validate();
  std::vector<RichnessTable> tables;
  for (auto n : sizes_of(cfg)) tables.push_back(richness_diagnostic(make_family(cfg, n), cfg.alpha, cfg.fit_eps));
  return tables;
}

}  // namespace sumprod
