#pragma once

#include <stdexcept>

namespace ethm {

// Frenet normal undefined where the curvature vanishes.
struct FrameSingularity : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Periodic-trapezoid quadrature failed its grid-halving self check.
struct QuadratureNotConverged : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotHermitian : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EigenSolveFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ethm
