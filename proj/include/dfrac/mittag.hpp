#ifndef DFRAC_MITTAG_HPP
#define DFRAC_MITTAG_HPP

#include <span>
#include <vector>

#include "dfrac/grid.hpp"

namespace dfrac {

/// One evaluation of the discrete Mittag-Leffler function
/// E(t, a, nu, beta, c, lambda) with beta = nu + beta_offset,
/// t at offset n on the shifted grid, and lambda encoded by shift:
/// shift = 0 is lambda = a, shift = r + 1 is lambda = sigma(a + r).
struct MlQuery {
  double nu = 1.0;
  int beta_offset = 0;  // b in {0, 1}
  double c = 0.0;
  int n = 0;
  int shift = 0;

  void validate() const;
};

/// E as a finite sum over j = 0..n of
///   c^j / Gamma(j nu + beta) * (t - lambda + j(nu-1))^((j nu + beta - 1)).
/// Terms with j > n - shift - beta_offset vanish by the zero branch and are
/// skipped. Terms are accumulated in sign/log form, rescaled by the largest
/// magnitude, and summed with compensation. At nu = 1 the terms reduce to
/// c^j C(n - shift, j + beta_offset) and are summed through an exact binomial
/// recurrence in quadruple precision, which keeps alternating sums (c < 0)
/// accurate where the log-domain path would lose everything to cancellation.
double ml_eval(const MlQuery& q);

/// ml_eval plus the magnitude of the largest term in the sum. term_scale is
/// the natural yardstick for "is this tiny value a violation or rounding":
/// positivity checks compare against -tol * max(1, term_scale).
struct MlValue {
  double value = 0.0;
  double term_scale = 0.0;
};
MlValue ml_eval_scaled(const MlQuery& q);

/// E(t, a, nu, nu, c, sigma(r)) for each requested r offset, sharing the
/// per-j gamma factors across the row. Entries are bitwise identical to the
/// corresponding ml_eval calls.
std::vector<double> ml_kernel_row(double nu, double c, int n,
                                  std::span<const int> r_offsets);

namespace detail {
/// Extended-precision variants for internal consumers (the closed-form
/// solver) that combine many E values and would lose accuracy to the
/// intermediate double rounding. ml_eval(q) == (double) ml_eval_l(q).
long double ml_eval_l(const MlQuery& q);
std::vector<long double> ml_kernel_row_l(double nu, double c, int n,
                                         std::span<const int> r_offsets);
}  // namespace detail

}  // namespace dfrac

#endif
