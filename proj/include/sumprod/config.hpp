#pragma once

#include <iosfwd>
#include <string>

#include "sumprod/experiments.hpp"

namespace sumprod {

/// Line-based `key = value` text. Keys are the ExperimentConfig field names;
/// `#` starts a comment; n_list takes comma- or space-separated integers.
/// Unknown keys and malformed values throw InvalidArgument.
ExperimentConfig parse_config(std::istream& is, const std::string& origin = "<config>");

/// Throws IoError when the file cannot be opened.
ExperimentConfig load_config(const std::string& path);

void write_config(std::ostream& os, const ExperimentConfig& cfg);

/// Parses "64,128 256" style lists.
std::vector<std::size_t> parse_size_list(const std::string& text);

}  // namespace sumprod
