#ifndef DFRAC_SPECIAL_HPP
#define DFRAC_SPECIAL_HPP

#include <cmath>
#include <cstdint>

#include "dfrac/errors.hpp"

namespace dfrac {

/// Sign/log-magnitude representation of a real number.
/// sign == 0 means exactly zero and log_abs is ignored.
/// The log is carried in extended precision: sums of gamma logs reach a few
/// hundred, so double storage alone would cap the represented value at about
/// 1e-13 relative accuracy, which cancellation-heavy sums then amplify.
struct SignedLog {
  long double log_abs = 0.0L;
  int sign = 0;

  static SignedLog zero() { return {0.0L, 0}; }
  static SignedLog one() { return {0.0L, 1}; }

  long double value_l() const { return sign == 0 ? 0.0L : sign * std::exp(log_abs); }
  double value() const { return static_cast<double>(value_l()); }

  friend SignedLog operator*(SignedLog a, SignedLog b) {
    if (a.sign == 0 || b.sign == 0) return zero();
    return {a.log_abs + b.log_abs, a.sign * b.sign};
  }
  friend SignedLog operator/(SignedLog a, SignedLog b) {
    if (a.sign == 0) return zero();
    return {a.log_abs - b.log_abs, a.sign * b.sign};
  }
};

/// Exact representation p*nu + q of a power-function argument.
/// All in-scope bases and exponents have this form, so pole and zero
/// classification never consults floating point.
struct ExactArg {
  std::int64_t nu_coeff = 0;  // p
  std::int64_t int_const = 0; // q

  double value(double nu) const {
    return static_cast<double>(nu_coeff) * nu + static_cast<double>(int_const);
  }

  // Extended-precision evaluation. p and q are small integers and nu is a
  // double, so p * nu + q is exact in long double; the double-rounded value()
  // would perturb gamma arguments by ~1e-15, which digamma magnifies into the
  // leading error of every falling-power factor.
  long double value_l(double nu) const {
    return static_cast<long double>(nu_coeff) * static_cast<long double>(nu) +
           static_cast<long double>(int_const);
  }

  // For nu in (0,1) the value is an integer iff p == 0; for nu == 1 it is
  // always the integer p + q.
  bool is_integer(double nu) const { return nu == 1.0 ? true : nu_coeff == 0; }

  std::int64_t integer_value(double nu) const {
    return nu == 1.0 ? nu_coeff + int_const : int_const;
  }

  bool is_negative_integer(double nu) const {
    return is_integer(nu) && integer_value(nu) < 0;
  }

  friend ExactArg operator+(ExactArg a, ExactArg b) {
    return {a.nu_coeff + b.nu_coeff, a.int_const + b.int_const};
  }
  friend ExactArg operator-(ExactArg a, ExactArg b) {
    return {a.nu_coeff - b.nu_coeff, a.int_const - b.int_const};
  }
  friend ExactArg operator+(ExactArg a, std::int64_t k) {
    return {a.nu_coeff, a.int_const + k};
  }
  friend bool operator==(ExactArg a, ExactArg b) = default;
};

/// Compensated (Kahan) accumulator, carried in extended precision.
struct KahanSum {
  long double sum = 0.0L;
  long double carry = 0.0L;

  void add(long double x) {
    const long double y = x - carry;
    const long double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  long double value_l() const { return sum; }
  double value() const { return static_cast<double>(sum); }
};

/// log|Gamma(x)| with the sign of Gamma(x), computed in extended precision.
/// Throws gamma_pole_error at nonpositive integers. The long double overload
/// exists so that exactly-represented arguments (ExactArg::value_l) reach the
/// gamma evaluation without an intermediate double rounding.
SignedLog lgamma_signed(long double x);
SignedLog lgamma_signed(double x);

/// Generalized falling factorial x^(y) = Gamma(x+1)/Gamma(x+1-y) with the
/// zero branch when x is not a negative integer but x - y is. Membership of
/// x - y in Z^- is decided exactly from the (p, q) integer data; requires
/// 0 < nu <= 1. Throws undefined_power_error for x in Z^-.
SignedLog falling_power_log(ExactArg x, ExactArg y, double nu);
double falling_power(ExactArg x, ExactArg y, double nu);

/// General-real falling power for exploratory use. Integer membership is
/// decided with an integrality tolerance of 1e-9 (documented, inexact).
double falling_power_real(double x, double y);

}  // namespace dfrac

#endif
