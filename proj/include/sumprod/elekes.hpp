#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "sumprod/geometry.hpp"
#include "sumprod/incidence.hpp"
#include "sumprod/sets.hpp"

namespace sumprod {

/// Tubes around y = a_j(x - a_i) for every ordered pair, and balls centred on
/// (A+A) × Q with Q a maximal δ-separated subset of AA.
struct ElekesSystem {
  SeparatedSet a;
  Scale scale;
  /// Tube (i, j) sits at index i·N + j.
  std::vector<DeltaTube> tubes;
  ValueList sums;
  ValueList products;
  ValueList q_witness;
  /// Ball (s, q) sits at index s·|Q| + q.
  std::vector<DeltaBall> balls;
  /// Well-spacing parameter: the tubes are 1/W-well spaced with W = N.
  double w = 0.0;

  std::size_t n() const { return a.size(); }
};

/// Builds the system from a set already snapped to scale.delta.
/// Throws PreconditionError for unsnapped input and InvalidArgument when the
/// scale's α is outside (1, 3/2] or its N differs from |a|.
ElekesSystem build_elekes(const SeparatedSet& a, const Scale& scale);

/// Incidence counts of the system's tubes against its own balls.
IncidenceReport elekes_incidences(const ElekesSystem& sys, unsigned threads = 0);

/// Smallest per-tube ball count; at least N for every tube by construction.
std::uint32_t verify_tube_richness(const ElekesSystem& sys, unsigned threads = 0);
std::uint32_t min_tube_richness(const IncidenceReport& report);

/// Number of distinct Q points selected by the N witnesses (a_i + a_k, q_k)
/// of tube (i, j); equals N when the witnesses are pairwise distinct.
std::size_t distinct_witnesses(const ElekesSystem& sys, std::size_t i, std::size_t j);

/// Quantities of the incidence chain N² <= |P_N| ≲ δ^(1-ε)|B|W²/N + δ^(-2+ε)/N.
struct Eq1Report {
  std::size_t n = 0;
  double alpha = 0.0;
  double delta = 0.0;
  double eps = 0.0;
  /// ε' = εα, reported alongside ε.
  double eps_prime = 0.0;
  double w = 0.0;
  std::size_t tubes = 0;
  std::size_t cover_sum = 0;
  std::size_t cover_prod = 0;
  std::size_t balls = 0;
  /// Tubes meeting at least N balls.
  std::size_t rich_tubes = 0;
  std::uint64_t incidences = 0;
  double term_balls = 0.0;   // δ^(1-ε)·|B|·W²/N
  double term_lattice = 0.0; // δ^(-2+ε)/N
  double lower_bound = 0.0;  // N^(1+α-ε)
  double constant_floor = 0.0;
  /// |B| / N^(1+α-ε), the measured constant.
  double measured_constant = 0.0;
  bool all_tubes_rich = false;
  bool balls_above_floor = false;
};

Eq1Report eq1_report(const ElekesSystem& sys, const IncidenceReport& incidences, double constant_floor = 0.125);
Eq1Report eq1_report(const ElekesSystem& sys, double constant_floor = 0.125);

/// One `name=value` line per quantity.
void write_eq1_report(std::ostream& os, const Eq1Report& r);

}  // namespace sumprod
