// Error hierarchy shared by every module.  Each class corresponds to one
// failure mode and maps to a distinct process exit code in the CLI.
#pragma once

#include <stdexcept>
#include <string>

namespace kendall {

/// Base class for all library errors.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid parameter: bad alpha, unknown catalog name, inadmissible kernel.
class parameter_error : public error {
 public:
  using error::error;
};

/// Malformed caller input: non-increasing grids, u outside (0,1), bad n.
class input_error : public error {
 public:
  using error::error;
};

/// A quantity diverges at the requested point (transform equal to one,
/// generating function pole, zero conditioning mass).
class divergence_error : public error {
 public:
  using error::error;
};

/// Adaptive quadrature failed to reach the requested tolerance.
class integration_error : public error {
 public:
  using error::error;
};

/// A simulated path exceeded the configured step budget.
class runaway_error : public error {
 public:
  using error::error;
};

}  // namespace kendall
