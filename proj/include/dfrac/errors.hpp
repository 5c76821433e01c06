#ifndef DFRAC_ERRORS_HPP
#define DFRAC_ERRORS_HPP

#include <stdexcept>

namespace dfrac {

// Gamma evaluated at a nonpositive integer.
struct gamma_pole_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Falling power requested at a base in Z^- (outside the definition).
struct undefined_power_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Two sequences expected on the same grid/params are not.
struct grid_mismatch_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The single-sum fractional difference form is invalid (nu = 1).
struct representation_invalid_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Theorem hypotheses not met; the check was not run.
struct hypothesis_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Index outside the sequence horizon.
struct range_error : std::out_of_range {
  using std::out_of_range::out_of_range;
};

}  // namespace dfrac

#endif
