#include "sumprod/set_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

#include "sumprod/errors.hpp"

namespace sumprod {

namespace {

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(std::string_view s, const std::string& origin, std::size_t line) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw IoError(origin, "line " + std::to_string(line) + ": not a number: '" + std::string(s) + "'");
  return v;
}

}  // namespace

void write_values(std::ostream& os, std::span<const double> values, std::optional<double> delta) {
  os << "# n=" << values.size() << " delta=" << format_double(delta.value_or(0.0)) << '\n';
  for (double v : values) os << format_double(v) << '\n';
}

void write_set(std::ostream& os, const SeparatedSet& a) { write_values(os, a.values, a.on_grid_delta); }

void write_set(std::ostream& os, const ValueList& v) { write_values(os, v.values); }

SetFile read_values(std::istream& is, const std::string& origin) {
  SetFile out;
  std::optional<std::size_t> declared_n;
  bool header_seen = false;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    const auto line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (header_seen) continue;
      header_seen = true;
      std::istringstream hs{std::string(line.substr(1))};
      std::string tok;
      while (hs >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) continue;
        const auto key = tok.substr(0, eq);
        const auto val = std::string_view(tok).substr(eq + 1);
        if (key == "n") {
          declared_n = static_cast<std::size_t>(parse_double(val, origin, lineno));
        } else if (key == "delta") {
          const double d = parse_double(val, origin, lineno);
          if (d > 0.0) out.delta = d;
        }
      }
      continue;
    }
    out.values.push_back(parse_double(line, origin, lineno));
  }
  if (!header_seen) throw IoError(origin, "missing '# n=<N> delta=<d>' header");
  if (declared_n && *declared_n != out.values.size())
    throw IoError(origin, "header declares n=" + std::to_string(*declared_n) + " but file holds " +
                              std::to_string(out.values.size()) + " values");
  return out;
}

SetFile read_values_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path, "cannot open for reading");
  return read_values(in, path);
}

SeparatedSet load_separated_set(const std::string& path) {
  auto file = read_values_file(path);
  SeparatedSet s = make_separated(std::move(file.values));
  if (file.delta && is_on_grid(s.values, *file.delta)) s.on_grid_delta = file.delta;
  return s;
}

}  // namespace sumprod
