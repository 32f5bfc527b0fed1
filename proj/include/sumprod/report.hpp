#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sumprod/experiments.hpp"
#include "sumprod/fit.hpp"

namespace sumprod {

inline constexpr const char* kSweepHeader = "n,alpha,delta,cover_sum,cover_prod,product,bound,ratio";
inline constexpr const char* kApGpHeader = "n,alpha,delta,q,intersection_count,bound_exponent";

/// Doubles are written in shortest round-trip form, so reading a file back
/// reproduces the rows exactly.
void write_csv(std::ostream& os, std::span<const SweepRow> rows);
void write_csv(std::ostream& os, std::span<const ApGpRow> rows);

std::vector<SweepRow> read_sweep_csv(std::istream& is, const std::string& origin = "<csv>");
std::vector<ApGpRow> read_apgp_csv(std::istream& is, const std::string& origin = "<csv>");

struct Verdict {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Summary {
  std::vector<std::pair<std::string, ExponentFit>> fits;
  std::vector<Verdict> verdicts;
  std::vector<std::string> notes;

  bool all_passed() const;
};

void write_summary(std::ostream& os, const Summary& s);

Summary summarize(const SweepResult& r, const ExperimentConfig& cfg);
Summary summarize(const ApGpResult& r, const ExperimentConfig& cfg);

/// Writes the CSV to `path` and the summary to `path` + ".summary.txt".
/// Throws IoError naming the path on failure.
void write_report(std::span<const SweepRow> rows, const Summary& s, const std::string& path);
void write_report(std::span<const ApGpRow> rows, const Summary& s, const std::string& path);

void write_richness_table(std::ostream& os, const RichnessTable& t);

}  // namespace sumprod
