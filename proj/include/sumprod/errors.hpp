#pragma once

#include <stdexcept>
#include <string>

namespace sumprod {

/// Argument outside an operation's documented domain.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Grid snapping would move two points of a set onto the same multiple.
class SnapMergeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A size guard was exceeded (exhaustive oracles, brute-force counting, lattices).
class TooLargeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Input does not satisfy a structural precondition (e.g. set not on the δ-grid).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class IoError : public std::runtime_error {
 public:
  IoError(const std::string& path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(path) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace sumprod
