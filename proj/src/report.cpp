#include "sumprod/report.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "sumprod/errors.hpp"

namespace sumprod {

namespace {

std::string fmt(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

template <typename T>
T field(const std::vector<std::string>& cells, std::size_t i, const std::string& origin, std::size_t line) {
  T v{};
  const auto& s = cells[i];
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw IoError(origin, "line " + std::to_string(line) + ": bad field '" + s + "'");
  return v;
}

template <typename Row, typename Parse>
std::vector<Row> read_rows(std::istream& is, const std::string& origin, const char* header, std::size_t width,
                           Parse parse) {
  std::string line;
  if (!std::getline(is, line) || line != header) throw IoError(origin, std::string("expected header ") + header);
  std::vector<Row> rows;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto cells = split_csv(line);
    if (cells.size() != width) throw IoError(origin, "line " + std::to_string(lineno) + ": wrong field count");
    rows.push_back(parse(cells, lineno));
  }
  return rows;
}

std::string verdict_line(bool ok) { return ok ? "PASS" : "FAIL"; }

template <typename Row>
void write_report_impl(std::span<const Row> rows, const Summary& s, const std::string& path) {
  {
    std::ofstream csv(path, std::ios::binary);
    if (!csv) throw IoError(path, "cannot open for writing");
    write_csv(csv, rows);
    if (!csv.flush()) throw IoError(path, "write failed");
  }
  const std::string summary_path = path + ".summary.txt";
  std::ofstream out(summary_path, std::ios::binary);
  if (!out) throw IoError(summary_path, "cannot open for writing");
  write_summary(out, s);
  if (!out.flush()) throw IoError(summary_path, "write failed");
}

}  // namespace

void write_csv(std::ostream& os, std::span<const SweepRow> rows) {
  os << kSweepHeader << '\n';
  for (const auto& r : rows) {
    os << r.n << ',' << fmt(r.alpha) << ',' << fmt(r.delta) << ',' << r.cover_sum << ',' << r.cover_prod << ','
       << r.product << ',' << fmt(r.bound) << ',' << fmt(r.ratio) << '\n';
  }
}

void write_csv(std::ostream& os, std::span<const ApGpRow> rows) {
  os << kApGpHeader << '\n';
  for (const auto& r : rows) {
    os << r.n << ',' << fmt(r.alpha) << ',' << fmt(r.delta) << ',' << fmt(r.q) << ',' << r.intersection_count << ','
       << fmt(r.bound_exponent) << '\n';
  }
}

std::vector<SweepRow> read_sweep_csv(std::istream& is, const std::string& origin) {
  return read_rows<SweepRow>(is, origin, kSweepHeader, 8, [&](const auto& c, std::size_t l) {
    SweepRow r;
    r.n = field<std::size_t>(c, 0, origin, l);
    r.alpha = field<double>(c, 1, origin, l);
    r.delta = field<double>(c, 2, origin, l);
    r.cover_sum = field<std::size_t>(c, 3, origin, l);
    r.cover_prod = field<std::size_t>(c, 4, origin, l);
    r.product = field<std::uint64_t>(c, 5, origin, l);
    r.bound = field<double>(c, 6, origin, l);
    r.ratio = field<double>(c, 7, origin, l);
    return r;
  });
}

std::vector<ApGpRow> read_apgp_csv(std::istream& is, const std::string& origin) {
  return read_rows<ApGpRow>(is, origin, kApGpHeader, 6, [&](const auto& c, std::size_t l) {
    ApGpRow r;
    r.n = field<std::size_t>(c, 0, origin, l);
    r.alpha = field<double>(c, 1, origin, l);
    r.delta = field<double>(c, 2, origin, l);
    r.q = field<double>(c, 3, origin, l);
    r.intersection_count = field<std::size_t>(c, 4, origin, l);
    r.bound_exponent = field<double>(c, 5, origin, l);
    return r;
  });
}

bool Summary::all_passed() const {
  for (const auto& v : verdicts)
    if (!v.passed) return false;
  return true;
}

void write_summary(std::ostream& os, const Summary& s) {
  for (const auto& [name, fit] : s.fits) {
    os << "fit " << name << ": slope=" << fmt(fit.slope) << " intercept=" << fmt(fit.intercept)
       << " r_squared=" << fmt(fit.r_squared) << '\n';
  }
  for (const auto& v : s.verdicts) os << "verdict " << v.name << ": " << verdict_line(v.passed) << " (" << v.detail << ")\n";
  for (const auto& n : s.notes) os << "note " << n << '\n';
}

Summary summarize(const SweepResult& r, const ExperimentConfig& cfg) {
  Summary s;
  const double target = 1.0 + cfg.alpha;
  if (r.fit) {
    s.fits.emplace_back("log(product)~log(n)", *r.fit);
    const bool ap = cfg.family == Family::Ap;
    s.verdicts.push_back({"slope", r.slope_ok.value_or(false),
                          "slope=" + fmt(r.fit->slope) + (ap ? " window=[" : " floor=") + fmt(target - cfg.fit_eps) +
                              (ap ? "," + fmt(target + cfg.fit_eps) + "]" : "") + " fit_eps=" + fmt(cfg.fit_eps)});
  } else {
    s.notes.push_back("fewer than 3 rows: no exponent fit");
  }
  if (r.ap_sum_exact) s.verdicts.push_back({"cover_sum=2n-1", *r.ap_sum_exact, "ap family"});
  double min_ratio = r.rows.empty() ? 0.0 : r.rows.front().ratio;
  for (const auto& row : r.rows) min_ratio = std::min(min_ratio, row.ratio);
  s.verdicts.push_back({"ratio>=constant_floor", r.ratio_above_floor,
                        "min_ratio=" + fmt(min_ratio) + " constant_floor=" + fmt(cfg.constant_floor)});
  for (std::size_t i = 0; i < r.rows.size(); ++i)
    s.notes.push_back("n=" + std::to_string(r.rows[i].n) + " max_cover_times_delta=" + fmt(r.full_size_fraction[i]));
  return s;
}

Summary summarize(const ApGpResult& r, const ExperimentConfig& cfg) {
  Summary s;
  if (r.fit) {
    s.fits.emplace_back("log(count)~log(n)", *r.fit);
    const double bound = r.rows.front().bound_exponent;
    s.verdicts.push_back({"slope", r.slope_ok.value_or(false),
                          "slope=" + fmt(r.fit->slope) + " ceiling=" + fmt(bound + cfg.fit_eps) +
                              " bound_exponent=" + fmt(bound) + " fit_eps=" + fmt(cfg.fit_eps)});
  } else {
    s.notes.push_back("fewer than 3 rows: no exponent fit");
  }
  s.verdicts.push_back({"one_gp_point_per_ap_neighbourhood", r.no_double_hits, "exact"});
  return s;
}

void write_report(std::span<const SweepRow> rows, const Summary& s, const std::string& path) {
  write_report_impl(rows, s, path);
}

void write_report(std::span<const ApGpRow> rows, const Summary& s, const std::string& path) {
  write_report_impl(rows, s, path);
}

void write_richness_table(std::ostream& os, const RichnessTable& t) {
  os << "# n=" << t.n << " alpha=" << fmt(t.alpha) << " delta=" << fmt(t.delta) << " W=" << fmt(t.w)
     << " threshold=" << fmt(t.threshold) << " lattice_balls=" << t.lattice_balls << '\n';
  os << "r,P_r,at_least_r,r3_P_r_over_W4\n";
  for (const auto& row : t.rows)
    os << row.r << ',' << row.balls_in_bin << ',' << row.balls_at_least << ',' << fmt(row.normalized) << '\n';
  os << "# cumulative_nonincreasing=" << verdict_line(t.cumulative_nonincreasing)
     << " bins_nonincreasing=" << (t.bins_nonincreasing ? "yes" : "no") << '\n';
}

}  // namespace sumprod
