#include "sumprod/config.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

#include "sumprod/errors.hpp"

namespace sumprod {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

template <typename T>
T parse_number(const std::string& text, const std::string& key) {
  T value{};
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
    throw InvalidArgument("config: bad value '" + text + "' for key '" + key + "'");
  return value;
}

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

std::vector<std::size_t> parse_size_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::string token;
  auto flush = [&] {
    if (!token.empty()) out.push_back(parse_number<std::size_t>(token, "n_list"));
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t') {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  return out;
}

ExperimentConfig parse_config(std::istream& is, const std::string& origin) {
  ExperimentConfig cfg;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    const std::string line = trim(std::string_view(raw).substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw InvalidArgument(origin + ":" + std::to_string(lineno) + ": expected 'key = value'");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    try {
      if (key == "family") {
        cfg.family = parse_family(value);
      } else if (key == "n_list") {
        cfg.n_list = parse_size_list(value);
      } else if (key == "alpha") {
        cfg.alpha = parse_number<double>(value, key);
      } else if (key == "seed") {
        cfg.seed = parse_number<std::uint64_t>(value, key);
      } else if (key == "fit_eps") {
        cfg.fit_eps = parse_number<double>(value, key);
      } else if (key == "constant_floor") {
        cfg.constant_floor = parse_number<double>(value, key);
      } else if (key == "output_path") {
        cfg.output_path = value;
      } else if (key == "jitter") {
        cfg.jitter = parse_number<double>(value, key);
      } else if (key == "set_file") {
        cfg.set_file = value;
      } else {
        throw InvalidArgument("unknown key '" + key + "'");
      }
    } catch (const InvalidArgument& e) {
      throw InvalidArgument(origin + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path, "cannot open config");
  return parse_config(in, path);
}

void write_config(std::ostream& os, const ExperimentConfig& cfg) {
  os << "family = " << family_name(cfg.family) << '\n';
  os << "n_list = ";
  for (std::size_t i = 0; i < cfg.n_list.size(); ++i) os << (i ? "," : "") << cfg.n_list[i];
  os << '\n'
     << "alpha = " << format_double(cfg.alpha) << '\n'
     << "seed = " << cfg.seed << '\n'
     << "fit_eps = " << format_double(cfg.fit_eps) << '\n'
     << "constant_floor = " << format_double(cfg.constant_floor) << '\n'
     << "jitter = " << format_double(cfg.jitter) << '\n';
  if (!cfg.output_path.empty()) os << "output_path = " << cfg.output_path << '\n';
  if (!cfg.set_file.empty()) os << "set_file = " << cfg.set_file << '\n';
}

}  // namespace sumprod
