#include "dfrac/solver.hpp"

#include <cmath>
#include <functional>

#include "dfrac/mittag.hpp"

namespace dfrac {

namespace {

// x0 * (s - a)^((nu-1)) / Gamma(nu) sampled at shifted offsets 0..N.
std::vector<long double> homogeneous_seed(double x0, double nu, int N) {
  const SignedLog lg_nu = lgamma_signed(nu);
  std::vector<long double> u(static_cast<std::size_t>(N) + 1);
  for (int m = 0; m <= N; ++m) {
    const SignedLog fp = falling_power_log(ExactArg{1, m - 1}, ExactArg{1, -1}, nu);
    u[static_cast<std::size_t>(m)] =
        fp.sign == 0 ? 0.0L : x0 * fp.sign * std::exp(fp.log_abs - lg_nu.log_abs);
  }
  return u;
}

// Extended-precision T application on raw shifted-grid samples; the public
// apply_T wraps the same kernel for GridSeq arguments.
std::vector<long double> apply_T_raw(std::span<const double> y,
                                     const std::vector<long double>& f,
                                     double nu) {
  const int N = static_cast<int>(f.size()) - 1;
  std::vector<long double> g(static_cast<std::size_t>(std::max(N, 0)));
  for (int m = 0; m < N; ++m)
    g[static_cast<std::size_t>(m)] = y[static_cast<std::size_t>(m)] * f[static_cast<std::size_t>(m)];
  std::vector<long double> out(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n)
    out[static_cast<std::size_t>(n)] =
        detail::frac_sum_order(std::span<const long double>(g), ExactArg{1, 0}, nu, n);
  return out;
}

// Forward recursion on the summation equation with a generic right-hand side
// w(m) = rhs(m, x(m)); the right side at offset n only touches x(0..n-1).
std::vector<double> recurse_summation(
    double x0, double nu, int N,
    const std::function<double(int, double)>& rhs) {
  const SignedLog lg_nu = lgamma_signed(nu);
  std::vector<double> x(static_cast<std::size_t>(N) + 1);
  std::vector<double> w(static_cast<std::size_t>(N));
  x[0] = x0;
  for (int n = 1; n <= N; ++n) {
    w[static_cast<std::size_t>(n - 1)] = rhs(n - 1, x[static_cast<std::size_t>(n - 1)]);
    const SignedLog fp = falling_power_log(ExactArg{1, n - 1}, ExactArg{1, -1}, nu);
    const double kernel =
        fp.sign == 0 ? 0.0 : fp.sign * std::exp(fp.log_abs - lg_nu.log_abs);
    x[static_cast<std::size_t>(n)] =
        kernel * x0 + detail::frac_sum_order(w, ExactArg{1, 0}, nu, n);
  }
  return x;
}

}  // namespace

void IvpSpec::validate() const {
  params.validate();
  if (horizon < 0) throw hypothesis_error("IvpSpec: horizon must be nonnegative");
  if (y.family != GridFamily::ShiftedGrid || z.family != GridFamily::ShiftedGrid ||
      !(y.params == params) || !(z.params == params))
    throw grid_mismatch_error("IvpSpec: y and z must live on the shifted grid of params");
  if (horizon > 0 && (y.horizon() < horizon - 1 || z.horizon() < horizon - 1))
    throw hypothesis_error("IvpSpec: y and z need horizon >= N - 1");
}

std::optional<double> IvpSpec::constant_y() const {
  for (const double v : y.values)
    if (v != y.values.front()) return std::nullopt;
  return y.values.empty() ? 0.0 : y.values.front();
}

std::optional<double> IvpSpec::constant_z() const {
  for (const double v : z.values)
    if (v != z.values.front()) return std::nullopt;
  return z.values.empty() ? 0.0 : z.values.front();
}

GridSeq apply_T(const GridSeq& y, const GridSeq& f, double nu) {
  if (y.family != GridFamily::ShiftedGrid || f.family != GridFamily::ShiftedGrid ||
      !(y.params == f.params) || y.horizon() + 1 < f.horizon())
    throw grid_mismatch_error("apply_T: y and f must share the shifted grid");
  const int N = f.horizon();
  std::vector<double> g(static_cast<std::size_t>(std::max(N, 0)));
  for (int m = 0; m < N; ++m)
    g[static_cast<std::size_t>(m)] = y[m] * f[m];
  GridSeq out{GridFamily::ShiftedGrid, f.params, std::vector<double>(static_cast<std::size_t>(N) + 1)};
  for (int n = 0; n <= N; ++n)
    out[n] = detail::frac_sum_order(g, ExactArg{1, 0}, nu, n);
  return out;
}

Trajectory solve_series(const IvpSpec& spec) {
  spec.validate();
  const int N = spec.horizon;
  const double nu = spec.params.nu;

  std::vector<long double> u = homogeneous_seed(spec.x0, nu, N);
  std::vector<long double> v(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n)
    v[static_cast<std::size_t>(n)] =
        detail::frac_sum_order({spec.z.values.data(),
                                static_cast<std::size_t>(std::min(spec.z.horizon() + 1, N))},
                               ExactArg{1, 0}, nu, n);

  std::vector<KahanSum> acc(static_cast<std::size_t>(N) + 1);
  for (int j = 0; j <= N; ++j) {
    // (T^j u0)(n) and (T^j v0)(n) vanish for n < j.
    for (int n = j; n <= N; ++n) {
      acc[static_cast<std::size_t>(n)].add(u[static_cast<std::size_t>(n)]);
      acc[static_cast<std::size_t>(n)].add(v[static_cast<std::size_t>(n)]);
    }
    if (j < N) {
      u = apply_T_raw(spec.y.values, u, nu);
      v = apply_T_raw(spec.y.values, v, nu);
    }
  }
  Trajectory traj{spec, {}, SolveMethod::Series};
  traj.values.resize(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) traj.values[static_cast<std::size_t>(n)] = acc[static_cast<std::size_t>(n)].value();
  return traj;
}

Trajectory solve_closed_const(const IvpSpec& spec) {
  spec.validate();
  const auto c = spec.constant_y();
  if (!c) throw hypothesis_error("solve_closed_const: y must be constant");
  const int N = spec.horizon;
  const double nu = spec.params.nu;
  const auto K = spec.constant_z();

  Trajectory traj{spec, {}, SolveMethod::ClosedForm};
  traj.values.resize(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) {
    KahanSum acc;
    acc.add(spec.x0 * detail::ml_eval_l({nu, 0, *c, n, 0}));
    if (K) {
      acc.add(*K * detail::ml_eval_l({nu, 1, *c, n, 0}));
    } else {
      std::vector<int> r(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = i;
      const auto row = detail::ml_kernel_row_l(nu, *c, n, r);
      for (int i = 0; i < n; ++i) acc.add(row[static_cast<std::size_t>(i)] * spec.z[i]);
    }
    traj.values[static_cast<std::size_t>(n)] = acc.value();
  }
  return traj;
}

Trajectory solve_oracle(const IvpSpec& spec) {
  spec.validate();
  Trajectory traj{spec, {}, SolveMethod::Oracle};
  traj.values = recurse_summation(
      spec.x0, spec.params.nu, spec.horizon,
      [&spec](int m, double x) { return spec.y[m] * x + spec.z[m]; });
  return traj;
}

std::vector<double> defining_residual(const Trajectory& traj) {
  const GridSeq x = traj.as_seq();
  const int N = traj.spec.horizon;
  std::vector<double> res;
  res.reserve(static_cast<std::size_t>(std::max(N - 1, 0)));
  for (int m = 0; m + 1 < N; ++m)
    res.push_back(frac_diff_comp(x, traj.spec.params.nu, m + 1) -
                  (traj.spec.y[m] * x[m] + traj.spec.z[m]));
  return res;
}

}  // namespace dfrac
