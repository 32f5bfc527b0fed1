#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sumprod/sets.hpp"

namespace sumprod {

/// Plain-text value file: a header `# n=<N> delta=<δ>` (δ = 0 when the values
/// are not on a grid) followed by one decimal value per line.
struct SetFile {
  std::vector<double> values;
  std::optional<double> delta;
};

void write_values(std::ostream& os, std::span<const double> values, std::optional<double> delta = std::nullopt);
void write_set(std::ostream& os, const SeparatedSet& a);
void write_set(std::ostream& os, const ValueList& v);

/// Parses the text format. Blank lines and further `#` lines are ignored; the
/// header's n must match the number of values read.
SetFile read_values(std::istream& is, const std::string& origin = "<stream>");
SetFile read_values_file(const std::string& path);

/// Loads a file as a SeparatedSet (values must be distinct and inside [1,2]).
SeparatedSet load_separated_set(const std::string& path);

}  // namespace sumprod
