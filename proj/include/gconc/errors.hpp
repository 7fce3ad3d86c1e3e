#pragma once
// Error taxonomy shared across the library.  Everything derives from
// std::runtime_error so callers can catch coarsely; the CLI maps the
// subtypes onto exit codes.

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gconc {

// Argument outside the mathematical domain of the routine.
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& what_arg)
      : std::runtime_error(what_arg) {}
};

// A moment was requested at or beyond a pole of its analytic continuation.
// `pole` is the real part of the nearest offending pole.
struct pole_error : domain_error {
  double pole;
  pole_error(const std::string& what_arg, double pole_location)
      : domain_error(what_arg), pole(pole_location) {}
};

// Input data is structurally unusable (zero matrix, empty spectrum, ...).
struct degenerate_input_error : domain_error {
  explicit degenerate_input_error(const std::string& what_arg)
      : domain_error(what_arg) {}
};

// The requested tolerance could not be met; `achieved` is the error
// estimate that was actually reached.
struct accuracy_error : std::runtime_error {
  double achieved;
  accuracy_error(const std::string& what_arg, double achieved_estimate)
      : std::runtime_error(what_arg), achieved(achieved_estimate) {}
};

// Two inputs that must describe the same experiment disagree, or an input
// violates a documented calling contract.
struct contract_error : std::runtime_error {
  explicit contract_error(const std::string& what_arg)
      : std::runtime_error(what_arg) {}
};

// A batch stopped early; `delivered` counts the samples produced before
// the failure.
struct partial_result_error : std::runtime_error {
  std::size_t delivered;
  partial_result_error(const std::string& what_arg, std::size_t count)
      : std::runtime_error(what_arg), delivered(count) {}
};

// The request is valid but outside what this implementation supports.
struct capability_error : std::runtime_error {
  explicit capability_error(const std::string& what_arg)
      : std::runtime_error(what_arg) {}
};

}  // namespace gconc
