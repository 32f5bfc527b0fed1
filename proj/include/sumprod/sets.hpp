#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace sumprod {

/// Absolute slack absorbed by every δ-separation comparison. Values live in
/// [1,4] so binary64 representation error is a few 1e-16; the slack keeps
/// exact δ-gaps (k·δ vs (k+1)·δ) separated after rounding.
inline constexpr double kSeparationSlack = 1e-12;

/// Two sorted reals `lo <= hi` are δ-separated when their gap is at least δ.
inline bool separated(double lo, double hi, double delta) {
  return hi - lo >= delta - kSeparationSlack;
}

/// Sorted, well-spaced finite subset of [1,2].
struct SeparatedSet {
  std::vector<double> values;
  double min_gap = 0.0;
  /// Set when every value is an integer multiple of this δ.
  std::optional<double> on_grid_delta;

  std::size_t size() const { return values.size(); }
};

/// Sorted, duplicate-free list of reals (a sumset or productset).
struct ValueList {
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
  bool empty() const { return values.empty(); }
};

/// The pair (α, δ = N^-α) plus the slack exponent used in exponent comparisons.
struct Scale {
  std::size_t n = 0;
  double alpha = 0.0;
  double delta = 0.0;
  double fit_eps = 0.1;

  /// Throws InvalidArgument unless n >= 1 and 1 < alpha <= 3/2.
  static Scale make(std::size_t n, double alpha, double fit_eps = 0.1);

  /// δ much smaller than the separation of `a`.
  bool admits(const SeparatedSet& a) const;
};

/// Builds a SeparatedSet from arbitrary values: sorts, rejects duplicates and
/// values outside [1,2], fills min_gap.
SeparatedSet make_separated(std::vector<double> values);

/// Smallest consecutive difference of a sorted list (0 for fewer than 2 values).
double min_consecutive_gap(std::span<const double> sorted);

/// True when min_gap >= c / N.
bool is_well_spaced(const SeparatedSet& a, double c = 0.5);

/// True when every value is an integer multiple of δ up to a few ulps.
bool is_on_grid(std::span<const double> values, double delta);

/// {1 + i/N : i = 1..N}.
SeparatedSet make_ap(std::size_t n);

/// {q^i : i = 1..N}. Requires q > 1.
ValueList make_gp(std::size_t n, double q);

/// {2^(i/N) : i = 1..N}, the default ratio q = 2^(1/N) with q^N = 2 exactly at i = N.
ValueList make_gp(std::size_t n);

/// {1 + (i + u_i·jitter)/N} with u_i uniform in [-1,1] drawn from a mt19937_64
/// seeded by `seed`. The last offset is folded to [-1,0] to stay inside [1,2].
SeparatedSet make_jittered(std::size_t n, double jitter, std::uint64_t seed);

/// Replaces every value by its nearest multiple of δ (ties toward the smaller
/// one). Values that would land outside [1,2] take the adjacent multiple
/// inside. Throws SnapMergeError when two values land on the same multiple,
/// which cannot happen for δ <= min_gap/4.
SeparatedSet snap_to_grid(const SeparatedSet& a, double delta);

/// Integer k with value = k·δ for a set snapped to δ.
std::vector<std::int64_t> grid_indices(const SeparatedSet& a);

/// All a_i + a_j (i <= j), sorted, exact duplicates collapsed.
ValueList sumset(std::span<const double> a);
/// All a_i · a_j (i <= j), sorted, exact duplicates collapsed.
ValueList productset(std::span<const double> a);

/// Sumset of an on-grid set computed on integer indices, so equal sums collapse
/// exactly. Throws PreconditionError if `a` is not on a grid.
ValueList grid_sumset(const SeparatedSet& a);

struct Covering {
  std::size_t count = 0;
  /// δ-separated subset realising `count`.
  std::vector<double> witness;
};

/// Maximum δ-separated subset of a sorted list by a left-to-right greedy sweep.
Covering cover(std::span<const double> sorted, double delta);

inline std::size_t covering_number(std::span<const double> sorted, double delta) {
  return cover(sorted, delta).count;
}
inline std::size_t covering_number(const ValueList& v, double delta) {
  return cover(v.values, delta).count;
}

/// Exhaustive maximum over all subsets. Throws TooLargeError for more than 20 values.
std::size_t covering_number_oracle(std::span<const double> sorted, double delta);

}  // namespace sumprod
