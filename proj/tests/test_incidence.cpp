#include <doctest.h>

#include <numeric>
#include <random>
#include <sstream>

#include "sumprod/errors.hpp"
#include "sumprod/incidence.hpp"

using namespace sumprod;

namespace {

struct Instance {
  std::vector<DeltaTube> tubes;
  std::vector<DeltaBall> balls;
};

Instance random_instance(std::mt19937_64& rng, std::size_t max_tubes, std::size_t max_balls) {
  std::uniform_real_distribution<double> coord(0.0, 4.0);
  const double delta = std::uniform_real_distribution<double>(0.02, 0.5)(rng);
  Instance in;
  const std::size_t nt = rng() % (max_tubes + 1), nb = rng() % (max_balls + 1);
  for (std::size_t k = 0; k < nt; ++k) {
    const Point p(coord(rng), coord(rng));
    // Occasionally vertical or horizontal segments.
    Point q(coord(rng), coord(rng));
    if (rng() % 10 == 0) q.x() = p.x();
    if (rng() % 10 == 1) q.y() = p.y();
    if (q == p) q.x() += 0.5;
    in.tubes.push_back(DeltaTube::make(p, q, delta));
  }
  for (std::size_t k = 0; k < nb; ++k) {
    // Some balls placed on a tube core to exercise boundary cases.
    if (!in.tubes.empty() && rng() % 4 == 0) {
      const auto& t = in.tubes[rng() % in.tubes.size()];
      const double s = std::uniform_real_distribution<double>(0, 1)(rng);
      in.balls.push_back({t.p0 + s * (t.p1 - t.p0), delta});
    } else {
      in.balls.push_back({Point(coord(rng), coord(rng)), delta});
    }
  }
  return in;
}

void check_same(const IncidenceReport& a, const IncidenceReport& b) {
  CHECK(a.incidences == b.incidences);
  CHECK(a.per_tube_richness == b.per_tube_richness);
  CHECK(a.per_ball_richness == b.per_ball_richness);
  CHECK(a.ball_histogram.bins == b.ball_histogram.bins);
  CHECK(a.tube_histogram.bins == b.tube_histogram.bins);
}

}  // namespace

TEST_CASE("single tube examples") {
  const double delta = 0.01;
  const std::vector<DeltaTube> t{tube_from_line(1, 1, delta)};
  const std::vector<DeltaBall> on{{Point(2, 1), delta}};
  const std::vector<DeltaBall> off{{Point(2, 1) + 3 * delta * Point(-1, 1).normalized(), delta}};
  CHECK(count_incidences(t, on).incidences == 1);
  CHECK(count_incidences(t, off).incidences == 0);
  CHECK(count_incidences_bruteforce(t, on).incidences == 1);
  CHECK(count_incidences_bruteforce(t, off).incidences == 0);
}

TEST_CASE("empty inputs") {
  const auto r = count_incidences({}, std::vector<DeltaBall>{{Point(1, 1), 0.1}});
  CHECK(r.incidences == 0);
  CHECK(r.per_tube_richness.empty());
  CHECK(r.per_ball_richness == std::vector<std::uint32_t>{0});
  CHECK(count_incidences({}, {}).incidences == 0);
}

TEST_CASE("grid engine equals brute force") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 300; ++trial) {
    const auto in = random_instance(rng, 24, 96);
    const auto fast = count_incidences(in.tubes, in.balls);
    const auto slow = count_incidences_bruteforce(in.tubes, in.balls);
    check_same(fast, slow);
    CHECK(std::accumulate(fast.per_tube_richness.begin(), fast.per_tube_richness.end(), std::uint64_t{0}) ==
          std::accumulate(fast.per_ball_richness.begin(), fast.per_ball_richness.end(), std::uint64_t{0}));
  }
}

TEST_CASE("thread count does not change the result") {
  std::mt19937_64 rng(3);
  const auto in = random_instance(rng, 400, 2000);
  const auto one = count_incidences(in.tubes, in.balls, 1);
  check_same(one, count_incidences(in.tubes, in.balls, 4));
}

TEST_CASE("translation invariance by dyadic offsets") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    auto in = random_instance(rng, 16, 64);
    const auto before = count_incidences(in.tubes, in.balls);
    const Point shift(0.25, -0.5);
    for (auto& t : in.tubes) t = DeltaTube::make(t.p0 + shift, t.p1 + shift, t.radius);
    for (auto& b : in.balls) b.center += shift;
    check_same(before, count_incidences(in.tubes, in.balls));
  }
}

TEST_CASE("richness histogram") {
  const std::vector<std::uint32_t> fives(7, 5);
  const auto h = RichnessHistogram::from(fives);
  CHECK(h.at(2) == 7);
  CHECK(h.incident_objects() == 7);
  CHECK(h.total_incidences == 35);

  const auto rep = IncidenceReport::from_richness(fives, fives);
  CHECK(rich_objects(rep, 4, Side::Tubes) == 7);
  CHECK(rich_objects(rep, 8, Side::Tubes) == 0);
  CHECK(at_least_rich(rep, 4, Side::Balls) == 7);
  CHECK(at_least_rich(rep, 6, Side::Balls) == 0);

  const std::vector<std::uint32_t> mixed{0, 1, 2, 3, 4, 7, 8, 100};
  const auto m = RichnessHistogram::from(mixed);
  CHECK(m.incident_objects() == 7);
  CHECK(m.at(0) == 1);
  CHECK(m.at(1) == 2);
  CHECK(m.at(2) == 2);
  CHECK(m.at(3) == 1);
  CHECK(m.at(6) == 1);
}

TEST_CASE("merge_reports concatenates two tube families") {
  std::mt19937_64 rng(4);
  const auto in = random_instance(rng, 16, 64);
  const std::size_t half = in.tubes.size() / 2;
  const std::vector<DeltaTube> lo(in.tubes.begin(), in.tubes.begin() + half);
  const std::vector<DeltaTube> hi(in.tubes.begin() + half, in.tubes.end());
  const auto merged = merge_reports(count_incidences(lo, in.balls), count_incidences(hi, in.balls));
  check_same(merged, count_incidences(in.tubes, in.balls));
  CHECK_THROWS_AS(merge_reports(count_incidences(lo, in.balls), count_incidences(hi, {})), InvalidArgument);
}

TEST_CASE("brute force guard") {
  const std::vector<DeltaTube> tubes(20000, tube_from_line(1, 1, 0.01));
  const std::vector<DeltaBall> balls(10000, DeltaBall{Point(0, 0), 0.01});
  CHECK_THROWS_AS(count_incidences_bruteforce(tubes, balls), TooLargeError);
}

TEST_CASE("incidence report text") {
  const std::vector<std::uint32_t> tubes{3, 1};
  const std::vector<std::uint32_t> balls{2, 1, 1};
  std::ostringstream os;
  write_incidence_report(os, IncidenceReport::from_richness(tubes, balls), 0.01, 2);
  const auto text = os.str();
  CHECK(text.find("incidences=4") != std::string::npos);
  CHECK(text.find("r=1 P_r_balls=2 P_r_tubes=1") != std::string::npos);
  CHECK(text.find("r=2 P_r_balls=1 P_r_tubes=1") != std::string::npos);
}
