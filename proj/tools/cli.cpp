#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sumprod/config.hpp"
#include "sumprod/elekes.hpp"
#include "sumprod/errors.hpp"
#include "sumprod/experiments.hpp"
#include "sumprod/incidence.hpp"
#include "sumprod/report.hpp"
#include "sumprod/set_io.hpp"
#include "sumprod/sets.hpp"

namespace sumprod::cli {

namespace {

struct FamilyOptions {
  std::string family = "ap";
  std::size_t n = 16;
  double jitter = 0.25;
  std::uint64_t seed = 0;
  std::string file;
};

void add_family_options(CLI::App* cmd, FamilyOptions& f) {
  cmd->add_option("--family", f.family, "Set family: ap, jittered or custom-file")
      ->check(CLI::IsMember({"ap", "jittered", "custom-file"}));
  cmd->add_option("--n", f.n, "Cardinality N")->check(CLI::Range(std::size_t{1}, std::size_t{1} << 20));
  cmd->add_option("--jitter", f.jitter, "Jitter fraction in [0, 1/2) for the jittered family");
  cmd->add_option("--seed", f.seed, "Seed for the jittered family");
  cmd->add_option("--file", f.file, "Value file for the custom-file family");
}

SeparatedSet build_family(const FamilyOptions& f) {
  ExperimentConfig cfg;
  cfg.family = parse_family(f.family);
  cfg.jitter = f.jitter;
  cfg.seed = f.seed;
  cfg.set_file = f.file;
  if (cfg.family == Family::CustomFile && f.file.empty()) throw InvalidArgument("--family custom-file needs --file");
  return make_family(cfg, f.n);
}

// Writes through `out` unless a path is given.
class Sink {
 public:
  Sink(std::ostream& fallback, const std::string& path) : os_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw IoError(path, "cannot open for writing");
      os_ = file_.get();
    }
  }
  std::ostream& operator*() { return *os_; }

 private:
  std::ostream* os_;
  std::unique_ptr<std::ofstream> file_;
};

// Options shared by the experiment subcommands; unset flags leave the
// config value alone.
struct ExperimentOptions {
  std::string config;
  std::string family;
  std::vector<std::size_t> n_list;
  std::optional<double> alpha;
  std::optional<std::uint64_t> seed;
  std::optional<double> eps;
  std::optional<double> floor;
  std::optional<double> jitter;
  std::string file;
  std::string out;
};

void add_experiment_options(CLI::App* cmd, ExperimentOptions& o) {
  cmd->add_option("--config", o.config, "Config file with key = value lines");
  cmd->add_option("--family", o.family, "Override family: ap, jittered or custom-file")
      ->check(CLI::IsMember({"ap", "jittered", "custom-file"}));
  cmd->add_option("--n", o.n_list, "Override n_list (comma separated or repeated)")->delimiter(',');
  cmd->add_option("--alpha", o.alpha, "Override alpha in (1, 3/2]");
  cmd->add_option("--seed", o.seed, "Override seed");
  cmd->add_option("--eps", o.eps, "Override fit_eps (slack on fitted exponents)");
  cmd->add_option("--floor", o.floor, "Override constant_floor");
  cmd->add_option("--jitter", o.jitter, "Override jitter");
  cmd->add_option("--file", o.file, "Override set_file");
  cmd->add_option("--out", o.out, "Report destination (CSV; summary goes to <out>.summary.txt)");
}

ExperimentConfig resolve_config(const ExperimentOptions& o, ExperimentConfig defaults) {
  ExperimentConfig cfg = o.config.empty() ? std::move(defaults) : load_config(o.config);
  if (!o.family.empty()) cfg.family = parse_family(o.family);
  if (!o.n_list.empty()) cfg.n_list = o.n_list;
  if (o.alpha) cfg.alpha = *o.alpha;
  if (o.seed) cfg.seed = *o.seed;
  if (o.eps) cfg.fit_eps = *o.eps;
  if (o.floor) cfg.constant_floor = *o.floor;
  if (o.jitter) cfg.jitter = *o.jitter;
  if (!o.file.empty()) cfg.set_file = o.file;
  if (!o.out.empty()) cfg.output_path = o.out;
  cfg.validate();
  return cfg;
}

template <typename Rows>
void emit(std::ostream& out, const Rows& rows, const Summary& summary, const std::string& path) {
  if (!path.empty()) {
    write_report(rows, summary, path);
    write_summary(out, summary);
    return;
  }
  write_csv(out, rows);
  std::ostringstream s;
  write_summary(s, summary);
  std::istringstream lines(s.str());
  for (std::string line; std::getline(lines, line);) out << "# " << line << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discretized sum-product toolkit: well-spaced sets, covering numbers, tube/ball incidences"};
  app.name("sumprod");
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  // gen
  FamilyOptions gen_family;
  std::string gen_kind = "ap";
  std::optional<double> gen_q;
  std::optional<double> gen_delta;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Generate a set and write it in the value-file format");
  gen->add_option("--kind", gen_kind, "ap, jittered or gp")->check(CLI::IsMember({"ap", "jittered", "gp"}));
  gen->add_option("--n", gen_family.n, "Cardinality N")->check(CLI::Range(std::size_t{1}, std::size_t{1} << 24));
  gen->add_option("--jitter", gen_family.jitter, "Jitter fraction in [0, 1/2)");
  gen->add_option("--seed", gen_family.seed, "Seed for the jittered family");
  gen->add_option("--q", gen_q, "Ratio of the geometric progression (default 2^(1/N))");
  gen->add_option("--delta", gen_delta, "Snap the set to the multiples of delta");
  gen->add_option("--out", gen_out, "Output path (default: standard output)");

  // cover
  std::string cover_file;
  double cover_delta = 0.0;
  std::string cover_of = "set";
  auto* cover_cmd = app.add_subcommand("cover", "Print the covering number N(V, delta) of a value file");
  cover_cmd->add_option("--file", cover_file, "Value file")->required();
  cover_cmd->add_option("--delta", cover_delta, "Separation scale delta")->required()->check(CLI::PositiveNumber);
  cover_cmd->add_option("--of", cover_of, "Cover the values themselves (set), their sumset (sum) or productset (prod)")
      ->check(CLI::IsMember({"set", "sum", "prod"}));

  // incidence
  FamilyOptions inc_family;
  double inc_alpha = 1.25;
  bool inc_lattice = false;
  std::string inc_out;
  auto* incidence = app.add_subcommand("incidence", "Count incidences of the Elekes tubes of a set");
  add_family_options(incidence, inc_family);
  incidence->add_option("--alpha", inc_alpha, "Exponent alpha in (1, 3/2]; delta = N^-alpha");
  incidence->add_flag("--lattice", inc_lattice, "Count against the (delta/2)Z^2 ball lattice on [0,4]x[-4,8]");
  incidence->add_option("--out", inc_out, "Output path (default: standard output)");

  // elekes
  FamilyOptions el_family;
  double el_alpha = 1.25;
  double el_eps = 0.1;
  double el_floor = 0.125;
  std::string el_out;
  auto* elekes = app.add_subcommand("elekes", "Build the Elekes system and check per-tube richness and the incidence chain");
  add_family_options(elekes, el_family);
  elekes->add_option("--alpha", el_alpha, "Exponent alpha in (1, 3/2]; delta = N^-alpha");
  elekes->add_option("--eps", el_eps, "Slack exponent eps");
  elekes->add_option("--floor", el_floor, "Constant c in |B| >= c N^(1+alpha-eps)");
  elekes->add_option("--out", el_out, "Output path (default: standard output)");

  // sweep / apgp / richness
  ExperimentOptions sweep_opts, apgp_opts, rich_opts;
  auto* sweep = app.add_subcommand("sweep", "Sum-product sweep: covering numbers of A+A and AA over n_list");
  add_experiment_options(sweep, sweep_opts);
  auto* apgp = app.add_subcommand("apgp", "Count GP points within delta of the AP {1 + i/N}");
  add_experiment_options(apgp, apgp_opts);
  auto* richness = app.add_subcommand("richness", "Richness table of the ball lattice against the Elekes tubes");
  add_experiment_options(richness, rich_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    // Subcommand-level help when one was selected.
    const auto selected = app.get_subcommands();
    err << (selected.empty() ? app.help() : selected.front()->help());
    return kExitUsage;
  }

  try {
    if (*gen) {
      Sink sink(out, gen_out);
      if (gen_kind == "gp") {
        write_set(*sink, gen_q ? make_gp(gen_family.n, *gen_q) : make_gp(gen_family.n));
        return kExitOk;
      }
      SeparatedSet a = gen_kind == "ap" ? make_ap(gen_family.n)
                                        : make_jittered(gen_family.n, gen_family.jitter, gen_family.seed);
      if (gen_delta) a = snap_to_grid(a, *gen_delta);
      write_set(*sink, a);
      return kExitOk;
    }

    if (*cover_cmd) {
      const SetFile file = read_values_file(cover_file);
      std::vector<double> values = file.values;
      std::sort(values.begin(), values.end());
      if (cover_of == "sum") values = sumset(values).values;
      if (cover_of == "prod") values = productset(values).values;
      out << covering_number(values, cover_delta) << '\n';
      return kExitOk;
    }

    if (*incidence) {
      const SeparatedSet a = build_family(inc_family);
      const Scale scale = Scale::make(a.size(), inc_alpha);
      const ElekesSystem sys = build_elekes(snap_to_grid(a, scale.delta), scale);
      Sink sink(out, inc_out);
      if (inc_lattice) {
        if (a.size() > 128) throw TooLargeError("incidence --lattice: N must be <= 128");
        const auto lattice = ball_lattice(Box{0.0, 4.0, -4.0, 8.0}, scale.delta);
        write_incidence_report(*sink, count_incidences(sys.tubes, lattice), scale.delta, sys.w);
      } else {
        write_incidence_report(*sink, elekes_incidences(sys), scale.delta, sys.w);
      }
      return kExitOk;
    }

    if (*elekes) {
      const SeparatedSet a = build_family(el_family);
      const Scale scale = Scale::make(a.size(), el_alpha, el_eps);
      const ElekesSystem sys = build_elekes(snap_to_grid(a, scale.delta), scale);
      const IncidenceReport report = elekes_incidences(sys);
      const std::uint32_t min_rich = min_tube_richness(report);
      const Eq1Report eq1 = eq1_report(sys, report, el_floor);
      Sink sink(out, el_out);
      const bool rich_ok = min_rich >= sys.n();
      *sink << "min_tube_richness=" << min_rich << '\n';
      write_eq1_report(*sink, eq1);
      *sink << "richness>=N: " << (rich_ok ? "PASS" : "FAIL") << '\n';
      return rich_ok && eq1.all_tubes_rich && eq1.balls_above_floor ? kExitOk : kExitClaimFailed;
    }

    if (*sweep) {
      const ExperimentConfig cfg = resolve_config(sweep_opts, ExperimentConfig{.n_list = {64, 128, 256, 512}});
      const SweepResult result = run_sumprod_sweep(cfg);
      const Summary summary = summarize(result, cfg);
      emit(out, result.rows, summary, cfg.output_path);
      return summary.all_passed() ? kExitOk : kExitClaimFailed;
    }

    if (*apgp) {
      ExperimentConfig defaults{.n_list = {256, 512, 1024, 2048, 4096}};
      defaults.fit_eps = 0.15;
      const ExperimentConfig cfg = resolve_config(apgp_opts, defaults);
      const ApGpResult result = run_apgp(cfg);
      const Summary summary = summarize(result, cfg);
      emit(out, result.rows, summary, cfg.output_path);
      return summary.all_passed() ? kExitOk : kExitClaimFailed;
    }

    if (*richness) {
      ExperimentConfig defaults{.n_list = {64}};
      defaults.alpha = 1.25;
      const ExperimentConfig cfg = resolve_config(rich_opts, defaults);
      const auto tables = run_richness_diagnostic(cfg);
      Sink sink(out, cfg.output_path);
      bool ok = true;
      for (const auto& t : tables) {
        write_richness_table(*sink, t);
        ok = ok && t.cumulative_nonincreasing;
      }
      return ok ? kExitOk : kExitClaimFailed;
    }
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitClaimFailed;
  }
  return kExitUsage;
}

}  // namespace sumprod::cli
