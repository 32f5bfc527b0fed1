#include <doctest.h>

#include <cmath>
#include <random>

#include "sumprod/elekes.hpp"
#include "sumprod/errors.hpp"
#include "sumprod/geometry.hpp"

using namespace sumprod;

TEST_CASE("tube_from_line") {
  const auto t = tube_from_line(1, 1, 0.01);
  CHECK(t.p0.x() == 0.0);
  CHECK(t.p0.y() == -1.0);
  CHECK(t.p1.x() == 4.0);
  CHECK(t.p1.y() == 3.0);
  CHECK(*t.slope == 1.0);
  CHECK(*tube_from_line(2, 1, 0.01).intercept == -2.0);
}

TEST_CASE("tube_contains") {
  const auto t = tube_from_line(1, 1, 0.01);
  CHECK(tube_contains(t, Point(2.0, 1.0)));
  // Perpendicular distance 0.05/sqrt(2) ~ 0.0354 > 0.01.
  CHECK_FALSE(tube_contains(t, Point(2.0, 1.05)));
  // Beyond the cap at (0,-1): distance sqrt(2) > 0.01.
  CHECK_FALSE(tube_contains(t, Point(-1.0, -2.0)));
  // Just inside and just outside the side, distance 0.0099 and 0.0101.
  const Point normal = Point(-1.0, 1.0).normalized();
  CHECK(tube_contains(t, Point(2.0, 1.0) + 0.0099 * normal));
  CHECK_FALSE(tube_contains(t, Point(2.0, 1.0) + 0.0101 * normal));
  CHECK(tube_contains(t, Point(4.0, 3.0) + 0.0099 * Point(1.0, 1.0).normalized()));
}

TEST_CASE("DeltaTube::make validates") {
  CHECK_THROWS_AS(DeltaTube::make(Point(0, 0), Point(1, 0), 0.0), InvalidArgument);
  CHECK_THROWS_AS(DeltaTube::make(Point(0, 0), Point(1, 0), -1.0), InvalidArgument);
}

TEST_CASE("tube areas") {
  const auto t = DeltaTube::make(Point(0, 0), Point(4, 0), 0.1);
  CHECK(tube_area(t) == doctest::Approx(2 * 0.1 * 4 + M_PI * 0.01));
  CHECK(tube_polygon_area(t) <= tube_area(t));
  CHECK(tube_polygon_area(t) == doctest::Approx(tube_area(t)).epsilon(1e-3));
  CHECK(tube_overlap_area(t, t) == doctest::Approx(tube_polygon_area(t)));
}

TEST_CASE("essential distinctness examples") {
  const double delta = 0.01;
  const auto a = DeltaTube::make(Point(0, 0), Point(4, 0), delta);
  const auto b = DeltaTube::make(Point(0, 10 * delta), Point(4, 10 * delta), delta);
  CHECK_FALSE(essentially_distinct_pair(a, a));
  CHECK(essentially_distinct_pair(a, b));

  const std::vector<DeltaTube> same{a, a};
  CHECK_FALSE(essentially_distinct_tubes(same).distinct);
  const std::vector<DeltaTube> apart{a, b};
  CHECK(essentially_distinct_tubes(apart).distinct);

  const std::vector<DeltaTube> mixed{a, DeltaTube::make(Point(0, 1), Point(4, 1), 2 * delta)};
  CHECK_THROWS_AS(essentially_distinct_tubes(mixed), InvalidArgument);
}

TEST_CASE("essentially_distinct_tubes agrees with the pairwise area oracle") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> slope(0.9, 1.3);
  std::uniform_real_distribution<double> icpt(-0.3, 0.3);
  for (int trial = 0; trial < 60; ++trial) {
    const double delta = 0.02;
    std::vector<DeltaTube> tubes;
    const std::size_t m = 2 + rng() % 31;
    for (std::size_t k = 0; k < m; ++k) {
      const double s = slope(rng), c = icpt(rng);
      tubes.push_back(DeltaTube::make(Point(0, c), Point(4, c + 4 * s), delta));
    }
    bool oracle = true;
    for (std::size_t i = 0; i < m && oracle; ++i)
      for (std::size_t j = i + 1; j < m && oracle; ++j) oracle = essentially_distinct_by_area(tubes[i], tubes[j]);
    CHECK(essentially_distinct_tubes(tubes).distinct == oracle);
  }
}

TEST_CASE("well_spaced_check") {
  const auto a = snap_to_grid(make_ap(4), Scale::make(4, 1.5).delta);
  const auto sys = build_elekes(a, Scale::make(4, 1.5));
  CHECK(well_spaced_check(sys.tubes, {4.0, 1}).max_occupancy == 1);

  const auto t = tube_from_line(1.5, 1.5, 0.01);
  const std::vector<DeltaTube> copies(16, t);
  const auto r = well_spaced_check(copies, {4.0, 1});
  CHECK(r.max_occupancy == 16);
  CHECK_FALSE(r.passes);

  CHECK(well_spaced_check(std::vector<DeltaTube>{}, {4.0, 1}).max_occupancy == 0);
}

TEST_CASE("ball_lattice") {
  CHECK(ball_lattice({0, 1, 0, 1}, 0.5).size() == 25);
  CHECK(ball_lattice({0.5, 0.5, 0.25, 0.25}, 0.5).size() == 1);
  CHECK(ball_lattice({0.1, 0.1, 0.1, 0.1}, 0.5).empty());
  CHECK_THROWS_AS(ball_lattice({0, 4, 0, 4}, 1e-6), TooLargeError);
}
