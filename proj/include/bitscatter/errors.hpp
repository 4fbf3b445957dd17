#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bitscatter {

// Domain violations (bad probabilities, orders, state indices) are reported
// with std::domain_error. The types below cover the remaining failure kinds.

/// A stream that cannot be decoded: truncated, corrupt, or trailing garbage.
class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Too few samples for the requested statistic.
class InsufficientDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A statistic that is mathematically undefined for its input (constant data,
/// KL divergence with a support violation, rank-deficient regression).
class UndefinedStatisticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A malformed text file. Carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace bitscatter
