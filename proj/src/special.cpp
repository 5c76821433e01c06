#include "dfrac/special.hpp"

#include <math.h>

#include <string>

namespace dfrac {

namespace {

bool is_nonpositive_integer(long double x) { return x <= 0.0L && x == std::floor(x); }

}  // namespace

SignedLog lgamma_signed(long double x) {
  if (is_nonpositive_integer(x))
    throw gamma_pole_error("Gamma pole at x = " + std::to_string(static_cast<double>(x)));
  int sign = 0;
  const long double log_abs = ::lgammal_r(x, &sign);
  return {log_abs, sign};
}

SignedLog lgamma_signed(double x) { return lgamma_signed(static_cast<long double>(x)); }

SignedLog falling_power_log(ExactArg x, ExactArg y, double nu) {
  if (x.is_negative_integer(nu))
    throw undefined_power_error("falling power undefined for base in Z^-");
  const ExactArg diff = x - y;
  if (diff.is_integer(nu)) {
    // Integer difference: the zero branch is decided exactly from (p, q).
    if (diff.integer_value(nu) < 0) return SignedLog::zero();
    const long double den_val = static_cast<long double>(diff.integer_value(nu) + 1);
    return lgamma_signed((x + 1).value_l(nu)) / lgamma_signed(den_val);
  }
  // Non-integer difference (p != 0, nu < 1): x - y cannot lie in Z^-, so the
  // zero branch never fires and both gamma arguments are off the pole lattice.
  return lgamma_signed((x + 1).value_l(nu)) / lgamma_signed((diff + 1).value_l(nu));
}

double falling_power(ExactArg x, ExactArg y, double nu) {
  return falling_power_log(x, y, nu).value();
}

double falling_power_real(double x, double y) {
  constexpr double tol = 1e-9;
  const auto near_int = [](double v) { return std::abs(v - std::round(v)) <= tol; };
  if (near_int(x) && std::round(x) < 0.0)
    throw undefined_power_error("falling power undefined for base in Z^-");
  const double diff = x - y;
  if (near_int(diff) && std::round(diff) < 0.0) return 0.0;
  return (lgamma_signed(x + 1.0) / lgamma_signed(x + 1.0 - y)).value();
}

}  // namespace dfrac
