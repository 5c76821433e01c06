#include "dfrac/fracops.hpp"

#include <cmath>
#include <string>

namespace dfrac {

namespace detail {

namespace {

template <typename T>
long double frac_sum_order_impl(std::span<const T> f, ExactArg order, double nu,
                                int n) {
  if (n < 0 || static_cast<std::size_t>(n) > f.size())
    throw range_error("frac_sum offset out of range");
  if (n == 0) return 0.0L;
  const SignedLog lg_order = lgamma_signed(order.value_l(nu));
  const ExactArg exponent = order + (-1);
  KahanSum acc;
  for (int m = 0; m < n; ++m) {
    const ExactArg base{order.nu_coeff, order.int_const + n - m - 2};
    const SignedLog k = falling_power_log(base, exponent, nu);
    if (k.sign == 0) continue;
    acc.add(k.sign * std::exp(k.log_abs - lg_order.log_abs) *
            static_cast<long double>(f[static_cast<std::size_t>(m)]));
  }
  return lg_order.sign * acc.value_l();
}

}  // namespace

double frac_sum_order(std::span<const double> f, ExactArg order, double nu, int n) {
  return static_cast<double>(frac_sum_order_impl(f, order, nu, n));
}

long double frac_sum_order(std::span<const long double> f, ExactArg order,
                           double nu, int n) {
  return frac_sum_order_impl(f, order, nu, n);
}

}  // namespace detail

double frac_sum(const GridSeq& f, double nu, int n) {
  f.params.validate();
  return detail::frac_sum_order(f.values, ExactArg{1, 0}, nu, n);
}

double frac_diff_comp(const GridSeq& f, double nu, int n) {
  f.params.validate();
  if (n < 0 || n + 1 > f.horizon())
    throw range_error("frac_diff_comp needs horizon >= n + 1");
  // Output offset n sits at grid point a + (1 - nu) + (n - 1); at nu = 1 the
  // operator is the forward difference at a + n - 1, which is also the
  // nu -> 1 limit of the composition below (offset 0 keeps the initial value,
  // mirroring the Riemann-Liouville kernel's behavior at the base point).
  if (nu == 1.0) return n == 0 ? f[0] : f[n] - f[n - 1];
  const ExactArg order{-1, 1};  // 1 - nu
  return detail::frac_sum_order(f.values, order, nu, n + 1) -
         detail::frac_sum_order(f.values, order, nu, n);
}

double frac_diff_direct(const GridSeq& f, double nu, int n) {
  f.params.validate();
  if (nu == 1.0)
    throw representation_invalid_error(
        "direct form has a Gamma(-1) pole at nu = 1; use the composition form");
  if (n < 0 || n > f.horizon()) throw range_error("frac_diff_direct offset out of range");
  const SignedLog lg = lgamma_signed(-nu);  // negative for nu in (0,1)
  const ExactArg exponent{-1, -1};
  KahanSum acc;
  for (int m = 0; m <= n; ++m) {
    const ExactArg base{-1, n - 1 - m};
    const SignedLog k = falling_power_log(base, exponent, nu);
    if (k.sign == 0) continue;
    acc.add(k.sign * std::exp(k.log_abs - lg.log_abs) * f[m]);
  }
  return lg.sign * acc.value();
}

GridSeq frac_sum_seq(const GridSeq& f, double nu) {
  GridSeq out{GridFamily::ShiftedGrid, {f.params.a, nu}, {}};
  out.values.resize(f.values.size());
  for (int n = 0; n <= f.horizon(); ++n) out[n] = frac_sum(f, nu, n);
  return out;
}

GridSeq frac_diff_seq(const GridSeq& f, double nu, DiffForm form) {
  GridSeq out{GridFamily::ShiftedGrid, {f.params.a, nu}, {}};
  if (form == DiffForm::Composition) {
    if (f.horizon() < 1) throw range_error("frac_diff needs at least two points");
    out.values.resize(f.values.size() - 1);
    for (int n = 0; n < f.horizon(); ++n) out[n] = frac_diff_comp(f, nu, n);
  } else {
    out.values.resize(f.values.size());
    for (int n = 0; n <= f.horizon(); ++n) out[n] = frac_diff_direct(f, nu, n);
  }
  return out;
}

}  // namespace dfrac
