#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace vsgc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input matrix violates the Hermiticity tolerance of the eigensolver.
struct NonHermitianInput : Error {
  using Error::Error;
};

// An eigenvalue fell below the roundoff clamp window. Signals an integrator
// failure upstream, not a user error.
struct PositivityViolation : Error {
  using Error::Error;
};

// A population left [-0.01, 1.01] during integration; dt is too coarse.
struct StepTooLarge : Error {
  using Error::Error;
};

// The steady-state system A v = -b is singular or near-singular: the
// dynamics has no unique stationary point (non-stationary regime).
struct DegenerateLiouvillian : Error {
  DegenerateLiouvillian(double smallest, double second_smallest)
      : Error("degenerate Liouvillian (no unique steady state); two smallest singular values " +
              std::to_string(smallest) + ", " + std::to_string(second_smallest)),
        smallest_singular_values{smallest, second_smallest} {}

  std::array<double, 2> smallest_singular_values;
};

// The closed-form steady state's shared denominator vanished.
struct DegenerateDenominator : Error {
  using Error::Error;
};

struct UnknownPreset : Error {
  using Error::Error;
};

// Configuration / CLI errors.
struct ParseError : Error {
  using Error::Error;
};
struct UnknownKey : Error {
  using Error::Error;
};
struct NonFiniteValue : Error {
  using Error::Error;
};

}  // namespace vsgc
