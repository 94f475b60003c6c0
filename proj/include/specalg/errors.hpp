#pragma once

#include <stdexcept>
#include <string>

namespace specalg {

/// Base class for every error thrown by this library.
class error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A caller-supplied value is unusable: malformed, out of range, or
/// inconsistent with the requested operation.  CLI maps these to exit code 2.
class invalid_input_error : public error {
  public:
    using error::error;
};

/// Evaluation was requested outside a family's natural open domain
/// (e.g. x <= 0 for the radial families, or exactly at a singular endpoint).
class domain_violation_error : public invalid_input_error {
  public:
    using invalid_input_error::invalid_input_error;
};

/// A parameter value makes an operator ill-defined (j = 0 where 1/j appears,
/// j = 1 where 1/(j-1) appears).
class singular_parameter_error : public invalid_input_error {
  public:
    using invalid_input_error::invalid_input_error;
};

/// Strict mode requires an exact half-odd-integer label and the supplied j
/// is not one.
class quantization_error : public invalid_input_error {
  public:
    using invalid_input_error::invalid_input_error;
};

/// The requested parameters admit no bound state; the message names the
/// admissible window.
class no_bound_state_error : public invalid_input_error {
  public:
    using invalid_input_error::invalid_input_error;
};

/// A closed-form end state would not be square-integrable for the requested
/// parameters.
class non_normalizable_error : public invalid_input_error {
  public:
    using invalid_input_error::invalid_input_error;
};

/// Discretization failed, e.g. a non-finite potential value at a grid point.
class grid_error : public invalid_input_error {
  public:
    using invalid_input_error::invalid_input_error;
};

/// A derivative of higher order than the evaluator can supply was requested.
class order_exhausted_error : public error {
  public:
    using error::error;
};

/// A function is numerically indistinguishable from zero where a nonzero
/// function is required (e.g. normalization of an annihilated state).
class degenerate_function_error : public error {
  public:
    using error::error;
};

} // namespace specalg
