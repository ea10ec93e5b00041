#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace charfield {

/// Malformed group-spec text. `position` is the 0-based offset of the offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Well-formed spec text naming a group that does not exist (e.g. "D17", "F15").
class SpecError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid input to a constructor or operation (non-bijective generator, non-normal subgroup, ...).
class ValidationError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A group could not be built (unsupported parameters, enumeration cap exceeded).
class ConstructionError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Closure exceeded the configured element cap.
class GroupTooLarge : public ConstructionError {
  using ConstructionError::ConstructionError;
};

/// A numerical pipeline stage failed (no admissible prime, eigenspace split did not terminate, ...).
class ComputationError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace charfield
