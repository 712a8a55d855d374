#pragma once

#include <stdexcept>
#include <string>

namespace ztile {

struct SingularMatrix : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonIntegerInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotSymmetric : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Internal-error class: a certified pipeline can never produce these.
struct NotPositiveDefinite : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotUnimodular : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonLatticeIntersection : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// |det L(T)| != volume, i.e. a non-parallelotope slipped past the gate.
struct InconsistentLattice : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ToleranceExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedDimension : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Instance-file validation failure; `field` names the offending entry,
// e.g. "generators[2]" or "parallelotope_spec[0].p".
struct InstanceError : std::runtime_error {
  std::string field;
  InstanceError(std::string field_, const std::string& msg)
      : std::runtime_error(field_ + ": " + msg), field(std::move(field_)) {}
};

}  // namespace ztile
