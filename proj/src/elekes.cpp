#include "sumprod/elekes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <set>
#include <string>

#include "sumprod/errors.hpp"

namespace sumprod {

ElekesSystem build_elekes(const SeparatedSet& a, const Scale& scale) {
  if (!(scale.alpha > 1.0 && scale.alpha <= 1.5))
    throw InvalidArgument("build_elekes: alpha must lie in (1, 3/2], got " + std::to_string(scale.alpha));
  if (scale.n != a.size())
    throw InvalidArgument("build_elekes: scale is for N=" + std::to_string(scale.n) + " but the set has " +
                          std::to_string(a.size()) + " values");
  if (!a.on_grid_delta || *a.on_grid_delta != scale.delta)
    throw PreconditionError("build_elekes: set must be snapped to delta = " + std::to_string(scale.delta));

  ElekesSystem sys;
  sys.a = a;
  sys.scale = scale;
  sys.w = static_cast<double>(a.size());
  const double delta = scale.delta;

  sys.tubes.reserve(a.size() * a.size());
  for (double ai : a.values)
    for (double aj : a.values) sys.tubes.push_back(tube_from_line(ai, aj, delta));

  // Index arithmetic keeps equal grid sums bit-identical; sets flagged as
  // snapped without lying on the grid fall back to floating sums.
  sys.sums = is_on_grid(a.values, delta) ? grid_sumset(a) : sumset(a.values);
  sys.products = productset(a.values);
  sys.q_witness.values = cover(sys.products.values, delta).witness;

  sys.balls.reserve(sys.sums.size() * sys.q_witness.size());
  for (double s : sys.sums.values)
    for (double q : sys.q_witness.values) sys.balls.push_back({Point(s, q), delta});
  return sys;
}

IncidenceReport elekes_incidences(const ElekesSystem& sys, unsigned threads) {
  return count_incidences(sys.tubes, sys.balls, threads);
}

std::uint32_t min_tube_richness(const IncidenceReport& report) {
  if (report.per_tube_richness.empty()) return 0;
  return *std::min_element(report.per_tube_richness.begin(), report.per_tube_richness.end());
}

std::uint32_t verify_tube_richness(const ElekesSystem& sys, unsigned threads) {
  return min_tube_richness(elekes_incidences(sys, threads));
}

std::size_t distinct_witnesses(const ElekesSystem& sys, std::size_t /*i*/, std::size_t j) {
  const auto& q = sys.q_witness.values;
  const double aj = sys.a.values.at(j);
  std::set<std::size_t> picked;
  for (double ak : sys.a.values) {
    // The greedy witness covering a product is the last selected point not above it.
    const double p = aj * ak;
    auto it = std::upper_bound(q.begin(), q.end(), p);
    if (it == q.begin()) continue;
    picked.insert(static_cast<std::size_t>(std::distance(q.begin(), it) - 1));
  }
  return picked.size();
}

Eq1Report eq1_report(const ElekesSystem& sys, const IncidenceReport& incidences, double constant_floor) {
  Eq1Report r;
  const double n = static_cast<double>(sys.n());
  r.n = sys.n();
  r.alpha = sys.scale.alpha;
  r.delta = sys.scale.delta;
  r.eps = sys.scale.fit_eps;
  r.eps_prime = r.eps * r.alpha;
  r.w = sys.w;
  r.tubes = sys.tubes.size();
  r.cover_sum = sys.sums.size();
  r.cover_prod = sys.q_witness.size();
  r.balls = sys.balls.size();
  r.rich_tubes = at_least_rich(incidences, sys.n(), Side::Tubes);
  r.incidences = incidences.incidences;
  r.term_balls = std::pow(r.delta, 1.0 - r.eps) * static_cast<double>(r.balls) * r.w * r.w / n;
  r.term_lattice = std::pow(r.delta, -2.0 + r.eps) / n;
  r.lower_bound = std::pow(n, 1.0 + r.alpha - r.eps);
  r.constant_floor = constant_floor;
  r.measured_constant = static_cast<double>(r.balls) / r.lower_bound;
  r.all_tubes_rich = r.rich_tubes == r.n * r.n;
  r.balls_above_floor = static_cast<double>(r.balls) >= constant_floor * r.lower_bound;
  return r;
}

Eq1Report eq1_report(const ElekesSystem& sys, double constant_floor) {
  return eq1_report(sys, elekes_incidences(sys), constant_floor);
}

void write_eq1_report(std::ostream& os, const Eq1Report& r) {
  const auto old_precision = os.precision(std::numeric_limits<double>::max_digits10);
  os << "n=" << r.n << '\n'
     << "alpha=" << r.alpha << '\n'
     << "delta=" << r.delta << '\n'
     << "eps=" << r.eps << '\n'
     << "eps_prime=" << r.eps_prime << '\n'
     << "W=" << r.w << '\n'
     << "tubes=" << r.tubes << '\n'
     << "cover_sum=" << r.cover_sum << '\n'
     << "cover_prod=" << r.cover_prod << '\n'
     << "balls=" << r.balls << '\n'
     << "incidences=" << r.incidences << '\n'
     << "rich_tubes=" << r.rich_tubes << '\n'
     << "term_balls=" << r.term_balls << '\n'
     << "term_lattice=" << r.term_lattice << '\n'
     << "lower_bound=" << r.lower_bound << '\n'
     << "constant_floor=" << r.constant_floor << '\n'
     << "measured_constant=" << r.measured_constant << '\n'
     << "all_tubes_rich=" << (r.all_tubes_rich ? "PASS" : "FAIL") << '\n'
     << "balls_above_floor=" << (r.balls_above_floor ? "PASS" : "FAIL") << '\n';
  os.precision(old_precision);
}

}  // namespace sumprod
