#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace resist {

/// Precondition violation on a public operation (bad vertex id, self-loop, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a resistance is requested on a disconnected graph or network.
class InfiniteResistance : public std::runtime_error {
 public:
  InfiniteResistance() : std::runtime_error("infinite resistance: graph is disconnected") {}
  explicit InfiniteResistance(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed textual input; `offset` is the byte position of the offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Requested order exceeds the desk-scale enumeration or canonical-form guard.
class GuardError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace resist
