// Test-only high-precision oracle: direct term-by-term evaluation of the
// falling power, fractional sum/difference, Mittag-Leffler sum, and the
// Bernoulli gap in 50-digit decimal arithmetic. Independent of the library
// implementation path: poles/zeros are classified from the same exact
// integer data, but all gamma evaluation and summation happen in cpp_dec_float.

#ifndef DFRAC_TESTS_ORACLE_HPP
#define DFRAC_TESTS_ORACLE_HPP

#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>
#include <vector>

#include "dfrac/grid.hpp"
#include "dfrac/mittag.hpp"

namespace oracle {

using real50 = boost::multiprecision::cpp_dec_float_50;
using dfrac::ExactArg;

inline real50 gamma50(const real50& x) { return boost::math::tgamma(x); }

inline real50 arg_value(ExactArg a, const real50& nu) {
  return nu * a.nu_coeff + a.int_const;
}

inline real50 falling_power(ExactArg x, ExactArg y, const real50& nu_r, double nu) {
  if (x.is_negative_integer(nu)) throw std::domain_error("oracle: base in Z^-");
  const ExactArg diff = x - y;
  if (!diff.is_integer(nu)) throw std::domain_error("oracle: non-integer difference");
  if (diff.integer_value(nu) < 0) return 0;
  return gamma50(arg_value(x, nu_r) + 1) / gamma50(arg_value(x - y, nu_r) + 1);
}

// (1/Gamma(order)) sum_{m=0}^{n-1} (order + n - m - 2)^((order-1)) f(m),
// order given as an exact pair.
inline real50 frac_sum(const std::vector<real50>& f, ExactArg order, double nu, int n) {
  const real50 nu_r(nu);
  real50 acc = 0;
  for (int m = 0; m < n; ++m) {
    const ExactArg base{order.nu_coeff, order.int_const + n - m - 2};
    acc += falling_power(base, order + (-1), nu_r, nu) * f[static_cast<std::size_t>(m)];
  }
  return acc / gamma50(arg_value(order, nu_r));
}

inline real50 ml_eval(const dfrac::MlQuery& q) {
  const real50 nu_r(q.nu);
  const real50 c_r(q.c);
  real50 acc = 0;
  real50 c_pow = 1;
  for (int j = 0; j <= q.n; ++j) {
    const auto base = dfrac::make_base_arg(dfrac::ArgKind::MlBase, j, q.n - q.shift);
    const auto expo = dfrac::make_base_arg(dfrac::ArgKind::MlExponent, j, q.beta_offset);
    const real50 fp = falling_power(base, expo, nu_r, q.nu);
    if (fp != 0)
      acc += c_pow / gamma50(nu_r * j + nu_r + q.beta_offset) * fp;
    c_pow *= c_r;
  }
  return acc;
}

inline real50 bernoulli_gap(double nu, double c, int n) {
  const real50 nu_r(nu);
  const real50 lhs = real50(c) * ml_eval({nu, 1, c, n, 0});
  const real50 rhs =
      real50(c) * falling_power(ExactArg{1, n - 1}, ExactArg{1, 0}, nu_r, nu) /
      gamma50(nu_r + 1);
  return lhs - rhs;
}

inline double to_double(const real50& x) { return x.convert_to<double>(); }

}  // namespace oracle

#endif
