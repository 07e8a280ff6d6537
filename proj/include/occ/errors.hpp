#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace occ {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A document (knowledge base, scenario, stimulus, params) failed its schema or
// cross-reference checks.
class ValidationError : public Error {
public:
  using Error::Error;
};

// A bounded scalar was constructed outside its range.
class RangeError : public Error {
public:
  using Error::Error;
};

// Lookup of an id that must exist (goal_weight on an unknown goal).
class LookupError : public Error {
public:
  using Error::Error;
};

// Misuse of history lifecycle: timestamp regression, duplicate or unknown
// prospect, double resolution.
class HistoryError : public Error {
public:
  using Error::Error;
};

// A scenario step failed during replay.
class StepError : public Error {
public:
  StepError(std::size_t step_index, const std::string& what)
      : Error("step " + std::to_string(step_index) + ": " + what),
        step_index_(step_index) {}

  std::size_t step_index() const noexcept { return step_index_; }

private:
  std::size_t step_index_;
};

}  // namespace occ
