#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spherepack {

// Invalid argument to a library operation (bad count, radius, index, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed input file. `line` is 1-based; 0 when the problem is not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, std::size_t line, const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + what),
        source_(std::move(source)),
        line_(line) {}

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

class NotInTable : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// The configuration did not develop into a packing at the top of the search bracket.
class UpperBoundInfeasible : public std::runtime_error {
 public:
  UpperBoundInfeasible(double r0_up, double energy)
      : std::runtime_error("upper bound radius " + std::to_string(r0_up) +
                           " is infeasible (energy " + std::to_string(energy) + ")"),
        r0_up_(r0_up),
        energy_(energy) {}

  double r0_up() const { return r0_up_; }
  double energy() const { return energy_; }

 private:
  double r0_up_;
  double energy_;
};

}  // namespace spherepack
