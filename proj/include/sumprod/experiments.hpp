#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sumprod/fit.hpp"
#include "sumprod/sets.hpp"

namespace sumprod {

enum class Family { Ap, Jittered, CustomFile };

const char* family_name(Family f);
/// Accepts "ap", "jittered", "custom-file"; throws InvalidArgument otherwise.
Family parse_family(const std::string& name);

struct ExperimentConfig {
  Family family = Family::Ap;
  std::vector<std::size_t> n_list;
  double alpha = 1.5;
  std::uint64_t seed = 0;
  double fit_eps = 0.1;
  double constant_floor = 0.125;
  std::string output_path;
  /// Jitter fraction for the jittered family.
  double jitter = 0.25;
  /// Value file for the custom-file family.
  std::string set_file;

  /// Throws InvalidArgument when n < 4, α outside (1, 3/2], or a
  /// custom-file family has no set_file.
  void validate() const;
};

/// The family member of size n (custom files ignore n).
SeparatedSet make_family(const ExperimentConfig& cfg, std::size_t n);

struct SweepRow {
  std::size_t n = 0;
  double alpha = 0.0;
  double delta = 0.0;
  std::size_t cover_sum = 0;
  std::size_t cover_prod = 0;
  std::uint64_t product = 0;
  double bound = 0.0;
  double ratio = 0.0;

  bool operator==(const SweepRow&) const = default;
};

/// Covering numbers of A+A and AA at δ = |A|^-α.
SweepRow sumprod_row(const SeparatedSet& a, double alpha);

struct SweepResult {
  std::vector<SweepRow> rows;
  /// log(product) against log N; present with at least 3 rows.
  std::optional<ExponentFit> fit;
  /// AP family only: cover_sum = 2N - 1 on every row.
  std::optional<bool> ap_sum_exact;
  /// Fitted slope within 1+α ± fit_eps (AP: both sides; other families: lower side only).
  std::optional<bool> slope_ok;
  /// Smallest ratio product / N^(1+α) against the configured constant floor.
  bool ratio_above_floor = true;
  /// max(cover_sum, cover_prod)·δ per row: how close one side gets to full size δ⁻¹.
  std::vector<double> full_size_fraction;
};

SweepResult run_sumprod_sweep(const ExperimentConfig& cfg);

struct ApGpRow {
  std::size_t n = 0;
  double alpha = 0.0;
  double delta = 0.0;
  double q = 0.0;
  std::size_t intersection_count = 0;
  double bound_exponent = 0.0;

  bool operator==(const ApGpRow&) const = default;
};

struct ApGpMeasurement {
  ApGpRow row;
  /// Largest number of GP points inside the δ-neighbourhood of one AP point.
  std::size_t max_hits_per_ap_point = 0;
};

/// |G ∩ E_δ(A)| for A = {1 + i/N}, G = {q^i} (i = 1..N), δ = N^-α. Without
/// `q` the ratio is 2^(1/N). Valid for every N >= 1.
ApGpMeasurement measure_apgp(std::size_t n, double alpha, std::optional<double> q = std::nullopt);

struct ApGpResult {
  std::vector<ApGpRow> rows;
  std::optional<ExponentFit> fit;
  /// Fitted slope <= max(α-1/2, (3-α)/2) + fit_eps.
  std::optional<bool> slope_ok;
  /// No AP point's δ-neighbourhood holds two GP points.
  bool no_double_hits = true;
};

ApGpResult run_apgp(const ExperimentConfig& cfg);

struct RichnessRow {
  std::uint64_t r = 0;
  /// Lattice balls with richness in [r, 2r).
  std::size_t balls_in_bin = 0;
  /// Lattice balls with richness >= r.
  std::size_t balls_at_least = 0;
  /// r³·|P_r| / W⁴.
  double normalized = 0.0;
};

struct RichnessTable {
  std::size_t n = 0;
  double alpha = 0.0;
  double delta = 0.0;
  double w = 0.0;
  /// Rows start above max(δ^(1-ε)·W², 1).
  double threshold = 0.0;
  std::vector<RichnessRow> rows;
  std::size_t lattice_balls = 0;
  /// Hard check: cumulative counts never increase with r (over all dyadic r).
  bool cumulative_nonincreasing = true;
  /// Informational: the per-bin counts above the threshold never increase.
  bool bins_nonincreasing = true;
};

/// Richness of the (δ/2)Z² lattice in [0,4]×[-4,8] against the Elekes tubes
/// of `a`. Throws TooLargeError when N > 128.
RichnessTable richness_diagnostic(const SeparatedSet& a, double alpha, double fit_eps);

std::vector<RichnessTable> run_richness_diagnostic(const ExperimentConfig& cfg);

}  // namespace sumprod
