#include "sumprod/sets.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "sumprod/errors.hpp"

namespace sumprod {

namespace {

ValueList collapse(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return ValueList{std::move(v)};
}

// Uniform double in [-1, 1] from the top 53 bits; independent of the
// standard library's distribution implementation.
double signed_unit(std::mt19937_64& rng) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return 2.0 * u - 1.0;
}

}  // namespace

Scale Scale::make(std::size_t n, double alpha, double fit_eps) {
  if (n < 1) throw InvalidArgument("scale: n must be >= 1");
  if (!(alpha > 1.0 && alpha <= 1.5))
    throw InvalidArgument("scale: alpha must lie in (1, 3/2], got " + std::to_string(alpha));
  if (!(fit_eps >= 0.0)) throw InvalidArgument("scale: fit_eps must be >= 0");
  return Scale{n, alpha, std::pow(static_cast<double>(n), -alpha), fit_eps};
}

bool Scale::admits(const SeparatedSet& a) const {
  return a.size() < 2 || delta < a.min_gap;
}

double min_consecutive_gap(std::span<const double> sorted) {
  if (sorted.size() < 2) return 0.0;
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < sorted.size(); ++i) gap = std::min(gap, sorted[i] - sorted[i - 1]);
  return gap;
}

SeparatedSet make_separated(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] >= 1.0 && values[i] <= 2.0))
      throw InvalidArgument("separated set: value " + std::to_string(values[i]) + " outside [1,2]");
    if (i > 0 && values[i] == values[i - 1])
      throw InvalidArgument("separated set: duplicate value " + std::to_string(values[i]));
  }
  SeparatedSet s;
  s.min_gap = min_consecutive_gap(values);
  s.values = std::move(values);
  return s;
}

bool is_well_spaced(const SeparatedSet& a, double c) {
  if (a.size() < 2) return true;
  return a.min_gap >= c / static_cast<double>(a.size());
}

bool is_on_grid(std::span<const double> values, double delta) {
  if (!(delta > 0.0)) return false;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  return std::all_of(values.begin(), values.end(), [delta](double v) {
    const double k = v / delta;
    return std::abs(k - std::round(k)) <= 4.0 * eps * std::max(1.0, std::abs(k));
  });
}

SeparatedSet make_ap(std::size_t n) {
  if (n < 2) throw InvalidArgument("make_ap: n must be >= 2");
  std::vector<double> v(n);
  const double nn = static_cast<double>(n);
  for (std::size_t i = 1; i <= n; ++i) v[i - 1] = static_cast<double>(n + i) / nn;
  SeparatedSet s;
  s.min_gap = min_consecutive_gap(v);
  s.values = std::move(v);
  return s;
}

ValueList make_gp(std::size_t n, double q) {
  if (!(q > 1.0)) throw InvalidArgument("make_gp: ratio must exceed 1");
  std::vector<double> v(n);
  for (std::size_t i = 1; i <= n; ++i) v[i - 1] = std::pow(q, static_cast<double>(i));
  return collapse(std::move(v));
}

ValueList make_gp(std::size_t n) {
  if (n < 1) throw InvalidArgument("make_gp: n must be >= 1");
  std::vector<double> v(n);
  const double nn = static_cast<double>(n);
  for (std::size_t i = 1; i <= n; ++i) v[i - 1] = std::exp2(static_cast<double>(i) / nn);
  return collapse(std::move(v));
}

SeparatedSet make_jittered(std::size_t n, double jitter, std::uint64_t seed) {
  if (n < 2) throw InvalidArgument("make_jittered: n must be >= 2");
  if (!(jitter >= 0.0 && jitter < 0.5)) throw InvalidArgument("make_jittered: jitter must lie in [0, 1/2)");
  std::mt19937_64 rng(seed);
  std::vector<double> v(n);
  const double nn = static_cast<double>(n);
  for (std::size_t i = 1; i <= n; ++i) {
    double u = signed_unit(rng);
    if (i == n) u = -std::abs(u);
    v[i - 1] = 1.0 + (static_cast<double>(i) + u * jitter) / nn;
  }
  if (jitter == 0.0) return make_ap(n);
  SeparatedSet s;
  s.min_gap = min_consecutive_gap(v);
  s.values = std::move(v);
  return s;
}

SeparatedSet snap_to_grid(const SeparatedSet& a, double delta) {
  if (!(delta > 0.0)) throw InvalidArgument("snap_to_grid: delta must be positive");
  const double lo_index = std::ceil(1.0 / delta);
  const double hi_index = std::floor(2.0 / delta);
  std::vector<double> out;
  out.reserve(a.size());
  for (double v : a.values) {
    const double k = v / delta;
    double base = std::floor(k);
    if (k - base > 0.5) base += 1.0;
    base = std::clamp(base, lo_index, hi_index);
    if (!out.empty() && base * delta == out.back())
      throw SnapMergeError("snap_to_grid: values " + std::to_string(out.back()) + " and " + std::to_string(v) +
                           " land on the same multiple of delta = " + std::to_string(delta));
    out.push_back(base * delta);
  }
  SeparatedSet s;
  s.min_gap = min_consecutive_gap(out);
  s.values = std::move(out);
  s.on_grid_delta = delta;
  return s;
}

std::vector<std::int64_t> grid_indices(const SeparatedSet& a) {
  if (!a.on_grid_delta) throw PreconditionError("grid_indices: set is not snapped to a grid");
  std::vector<std::int64_t> k;
  k.reserve(a.size());
  for (double v : a.values) k.push_back(std::llround(v / *a.on_grid_delta));
  return k;
}

ValueList sumset(std::span<const double> a) {
  std::vector<double> v;
  v.reserve(a.size() * (a.size() + 1) / 2);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i; j < a.size(); ++j) v.push_back(a[i] + a[j]);
  return collapse(std::move(v));
}

ValueList productset(std::span<const double> a) {
  std::vector<double> v;
  v.reserve(a.size() * (a.size() + 1) / 2);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i; j < a.size(); ++j) v.push_back(a[i] * a[j]);
  return collapse(std::move(v));
}

ValueList grid_sumset(const SeparatedSet& a) {
  const auto k = grid_indices(a);
  std::vector<std::int64_t> sums;
  sums.reserve(k.size() * (k.size() + 1) / 2);
  for (std::size_t i = 0; i < k.size(); ++i)
    for (std::size_t j = i; j < k.size(); ++j) sums.push_back(k[i] + k[j]);
  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  ValueList out;
  out.values.reserve(sums.size());
  for (auto s : sums) out.values.push_back(static_cast<double>(s) * *a.on_grid_delta);
  return out;
}

Covering cover(std::span<const double> sorted, double delta) {
  Covering c;
  for (double v : sorted) {
    if (c.witness.empty() || separated(c.witness.back(), v, delta)) c.witness.push_back(v);
  }
  c.count = c.witness.size();
  return c;
}

std::size_t covering_number_oracle(std::span<const double> sorted, double delta) {
  const std::size_t n = sorted.size();
  if (n > 20) throw TooLargeError("covering_number_oracle: at most 20 values, got " + std::to_string(n));
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const auto bits = static_cast<std::size_t>(std::popcount(mask));
    if (bits <= best) continue;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1u)) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if ((mask >> j & 1u) && !separated(std::min(sorted[i], sorted[j]), std::max(sorted[i], sorted[j]), delta)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) best = bits;
  }
  return best;
}

}  // namespace sumprod
