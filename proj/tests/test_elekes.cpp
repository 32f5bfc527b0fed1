#include <doctest.h>

#include <cmath>

#include "sumprod/elekes.hpp"
#include "sumprod/errors.hpp"

using namespace sumprod;

namespace {

ElekesSystem three_point_system() {
  // A = {1, 1.5, 2} with delta = 3^-1.5, treated as already snapped.
  auto a = make_separated({1.0, 1.5, 2.0});
  const auto scale = Scale::make(3, 1.5);
  a.on_grid_delta = scale.delta;
  return build_elekes(a, scale);
}

}  // namespace

TEST_CASE("N = 3 illustration") {
  const auto sys = three_point_system();
  CHECK(sys.scale.delta == doctest::Approx(0.19245).epsilon(1e-4));
  CHECK(sys.tubes.size() == 9);
  CHECK(sys.sums.values == std::vector<double>{2.0, 2.5, 3.0, 3.5, 4.0});
  CHECK(sys.products.values == std::vector<double>{1.0, 1.5, 2.0, 2.25, 3.0, 4.0});
  CHECK(sys.q_witness.size() == 6);
  CHECK(sys.balls.size() == 30);
  CHECK(verify_tube_richness(sys) >= 3);

  const auto eq1 = eq1_report(sys);
  CHECK(eq1.rich_tubes == 9);
  CHECK(eq1.all_tubes_rich);
  CHECK(eq1.balls == eq1.cover_sum * eq1.cover_prod);
}

TEST_CASE("tube (i,j) contains the N balls (a_i + a_k, a_j a_k)") {
  const auto sys = three_point_system();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const auto& t = sys.tubes[i * 3 + j];
      for (double ak : sys.a.values) CHECK(tube_contains(t, Point(sys.a.values[i] + ak, sys.a.values[j] * ak)));
      CHECK(distinct_witnesses(sys, i, j) == 3);
    }
}

TEST_CASE("N = 1") {
  auto a = make_separated({1.5});
  const auto scale = Scale::make(1, 1.5);
  a.on_grid_delta = scale.delta;
  const auto sys = build_elekes(a, scale);
  CHECK(sys.tubes.size() == 1);
  CHECK(sys.sums.size() == 1);
  CHECK(sys.products.size() == 1);
  CHECK(sys.balls.size() == 1);
  CHECK(verify_tube_richness(sys) >= 1);
}

TEST_CASE("preconditions") {
  const auto scale = Scale::make(8, 1.25);
  CHECK_THROWS_AS(build_elekes(make_ap(8), Scale::make(8, 1.25)), PreconditionError);
  const auto snapped = snap_to_grid(make_ap(8), scale.delta);
  CHECK_THROWS_AS(build_elekes(snapped, Scale::make(16, 1.25)), InvalidArgument);
  Scale bad = scale;
  bad.alpha = 2.0;
  CHECK_THROWS_AS(build_elekes(snapped, bad), InvalidArgument);
}

TEST_CASE("make_ap(32), alpha = 1.25: every tube is 32-rich") {
  const auto scale = Scale::make(32, 1.25);
  const auto sys = build_elekes(snap_to_grid(make_ap(32), scale.delta), scale);
  CHECK(verify_tube_richness(sys) >= 32);
}

TEST_CASE("make_ap(64), alpha = 1.25: ball count above N^(1+alpha)/8") {
  const auto scale = Scale::make(64, 1.25);
  const auto sys = build_elekes(snap_to_grid(make_ap(64), scale.delta), scale);
  CHECK(static_cast<double>(sys.balls.size()) >= std::pow(64.0, 2.25) / 8);
  const auto eq1 = eq1_report(sys);
  CHECK(eq1.balls_above_floor);
  CHECK(eq1.balls == sys.balls.size());
  CHECK(eq1.term_lattice == doctest::Approx(std::pow(scale.delta, -2 + 0.1) / 64));
}
