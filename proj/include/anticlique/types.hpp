#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace anticlique {

/// Vertex label, 1-based (1..v) on every public interface.
using Vertex = int;

/// Sorted ascending list of distinct 1-based vertex labels.
using VertexSet = std::vector<Vertex>;

using BigInt = boost::multiprecision::cpp_int;

/// Malformed graph input. Carries the offending line number (1-based, 0 if unknown).
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// Invalid solver configuration (bad order, non-cover, non-positive weight, ...).
class ConfigError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A size guard refused the request; the answer was not computed.
class GuardError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string to_string(const VertexSet& set);

}  // namespace anticlique
