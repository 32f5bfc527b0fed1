#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "sumprod");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = sumprod::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("sumprod_test_" + name);
}

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  const auto r = run({"bogus"});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
  CHECK(run({"elekes", "--frobnicate"}).code == 2);
  CHECK(run({"sweep", "--config", "missing.cfg"}).code == 2);
  CHECK(run({"elekes", "--n", "8", "--alpha", "2"}).code == 2);
}

TEST_CASE("--help exits 0 on every subcommand") {
  CHECK(run({"--help"}).code == 0);
  for (const char* sub : {"gen", "cover", "incidence", "elekes", "sweep", "apgp", "richness"}) {
    const auto r = run({sub, "--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("--") != std::string::npos);
  }
}

TEST_CASE("elekes prints the richness verdict") {
  const auto r = run({"elekes", "--n", "16", "--alpha", "1.25"});
  CHECK(r.code == 0);
  CHECK(r.out.find("min_tube_richness=") != std::string::npos);
  CHECK(r.out.find("richness>=N: PASS") != std::string::npos);
}

TEST_CASE("gen then cover prints one integer") {
  const auto path = scratch("a.txt");
  REQUIRE(run({"gen", "--n", "10", "--out", path.string()}).code == 0);
  auto r = run({"cover", "--file", path.string(), "--delta", "0.01"});
  CHECK(r.code == 0);
  CHECK(r.out == "10\n");
  r = run({"cover", "--file", path.string(), "--delta", "0.01", "--of", "sum"});
  CHECK(r.out == "19\n");
  CHECK(run({"cover", "--file", "/nonexistent/a.txt", "--delta", "0.01"}).code == 2);
  std::filesystem::remove(path);
}

TEST_CASE("sweep with config file and report output") {
  const auto cfg = scratch("sweep.cfg");
  const auto out = scratch("sweep.csv");
  {
    std::ofstream f(cfg);
    f << "family = ap\nn_list = 8,16,32\nalpha = 1.5\noutput_path = " << out.string() << "\n";
  }
  const auto r = run({"sweep", "--config", cfg.string()});
  CHECK((r.code == 0 || r.code == 1));
  CHECK(std::filesystem::exists(out));
  CHECK(std::filesystem::exists(out.string() + ".summary.txt"));
  std::filesystem::remove(cfg);
  std::filesystem::remove(out);
  std::filesystem::remove(out.string() + ".summary.txt");
}

TEST_CASE("failed claim exits 1") {
  // An absurd constant floor makes the ball-count verdict fail.
  const auto r = run({"elekes", "--n", "8", "--alpha", "1.25", "--floor", "1e9"});
  CHECK(r.code == 1);
  CHECK(r.out.find("balls_above_floor=FAIL") != std::string::npos);
}
