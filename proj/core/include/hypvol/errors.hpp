#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypvol {

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class MapInvariant {
  LengthMismatch,
  NotPermutation,
  FixedDart,
  InvolutionViolation,
  Disconnected,
  NonPlanar,
};

std::string_view invariant_name(MapInvariant inv);

class MapValidationError : public std::runtime_error {
 public:
  MapValidationError(MapInvariant inv, const std::string& detail);
  MapInvariant invariant() const noexcept { return invariant_; }

 private:
  MapInvariant invariant_;
};

// A bound whose hypotheses are not met by the supplied data.
class NotApplicable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when the augmented polyhedron fails its own invariants after
// assembly, which almost always means the diagram's axis marking is bad.
class ConstructionInconsistency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CensusMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace hypvol
