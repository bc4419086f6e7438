#pragma once

#include <stdexcept>
#include <string>

namespace cia {

// Base for everything the library throws deliberately.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structural misuse: mismatched n/t, invalid dimension counts, bad arguments.
struct DimensionError : Error {
  using Error::Error;
};

// A plan does not cover (or over-covers) the messaging matrix it is used with.
struct PlanMismatchError : Error {
  using Error::Error;
};

// A constructor could not produce a plan at the requested dimension count.
// This is a definite negative verdict, not a tool failure.
struct InfeasibleError : Error {
  using Error::Error;
};

// Scenario file violated the schema; names the offending field.
struct ScenarioError : Error {
  ScenarioError(const std::string& field, const std::string& what)
      : Error("scenario field '" + field + "': " + what), field(field) {}
  std::string field;
};

// File could not be read or written.
struct IoError : Error {
  using Error::Error;
};

}  // namespace cia
