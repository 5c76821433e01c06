#include "dfrac/mittag.hpp"

#include <quadmath.h>

#include <algorithm>
#include <cmath>
#include <limits>

namespace dfrac {

namespace {

struct EvalResult {
  long double value = 0.0L;
  long double term_scale = 0.0L;
};

// Largest n - shift for which the quadruple-precision path evaluates gamma
// factors directly as values: arguments stay <= M + 2 and Gamma overflows
// __float128 only beyond ~1750, so M <= 1024 leaves ample headroom.
constexpr int kQuadHorizon = 1024;

// log Gamma(j nu + beta) for j = 0..jmax; the argument is always positive.
std::vector<long double> gamma_table(double nu, int beta_offset, int jmax) {
  const long double beta = static_cast<long double>(nu) + beta_offset;
  std::vector<long double> lg(static_cast<std::size_t>(jmax) + 1);
  for (int j = 0; j <= jmax; ++j)
    lg[static_cast<std::size_t>(j)] =
        lgamma_signed(static_cast<long double>(j) * nu + beta).log_abs;
  return lg;
}

// Every gamma argument in the quadruple-precision path has the exact form
// p*nu + s with integers p >= 0, s >= 0, so Gamma values are served from a
// per-nu table filled by the recurrence Gamma(z+1) = z Gamma(z): one
// (software, slow) tgammaq call per p-row instead of three per term. Each
// entry is a pure function of (nu, p, s) -- rows always fill forward from
// s = 0 -- so results do not depend on request order or thread interleaving.
class QuadGammaCache {
 public:
  void reset(double nu) {
    if (nu == nu_) return;
    nu_ = nu;
    rows_.clear();
  }

  // Gamma(p*nu + s); p = 0 is the factorial row (s >= 1).
  __float128 get(int p, int s) {
    if (static_cast<std::size_t>(p) >= rows_.size())
      rows_.resize(static_cast<std::size_t>(p) + 1);
    auto& row = rows_[static_cast<std::size_t>(p)];
    const int base = p == 0 ? 1 : 0;  // p = 0 starts at Gamma(1)
    if (row.empty())
      row.push_back(p == 0 ? 1 : tgammaq(p * static_cast<__float128>(nu_)));
    while (static_cast<int>(row.size()) + base <= s) {
      const int t = static_cast<int>(row.size()) + base - 1;
      row.push_back(row.back() * (p * static_cast<__float128>(nu_) + t));
    }
    return row[static_cast<std::size_t>(s - base)];
  }

 private:
  double nu_ = std::numeric_limits<double>::quiet_NaN();
  std::vector<std::vector<__float128>> rows_;
};

thread_local QuadGammaCache quad_cache;

// Direct quadruple-precision evaluation for nu < 1 and moderate horizons.
// Alternating sums (c < 0) cancel by up to ~1e15, so the ~1e-34 per-term
// rounding here is what keeps the cancelled residue meaningful where even
// long double terms would not be.
EvalResult ml_eval_quad(const MlQuery& q, int jmax) {
  quad_cache.reset(q.nu);
  const int M = q.n - q.shift;
  const __float128 c = q.c;
  __float128 cp = 1;
  __float128 sum = 0;
  __float128 scale = 0;
  for (int j = 0; j <= jmax; ++j) {
    // base = (j+1)(nu-1) + M and exponent = (j+1)nu - 1 + b differ by the
    // exact integer M - b - j >= 0, so the zero branch never fires and every
    // gamma argument is positive:
    //   numerator   Gamma(base + 1)        = Gamma((j+1)nu + (M - j))
    //   denominator Gamma(base + 1 - exp)  = (M - b - j)!
    //   denominator Gamma(j nu + beta)     = Gamma((j+1)nu + b)
    const __float128 num = quad_cache.get(j + 1, M - j);
    const __float128 den_fact = quad_cache.get(0, M - q.beta_offset - j + 1);
    const __float128 den_g = quad_cache.get(j + 1, q.beta_offset);
    const __float128 term = cp * (num / (den_fact * den_g));
    sum += term;
    const __float128 mag = term < 0 ? -term : term;
    if (mag > scale) scale = mag;
    cp *= c;
  }
  return {static_cast<long double>(sum), static_cast<long double>(scale)};
}

// nu = 1 reduction: term_j = c^j C(M, j + b) with M = n - shift. The
// alternating binomial sums this produces for c < 0 are catastrophically
// ill-conditioned in the log-domain path (condition number up to C(M, M/2)),
// so the terms are built by the exact binomial recurrence in quadruple
// precision instead. The recurrence is exact while C(M, k) fits the 113-bit
// significand, which covers every horizon the acceptance grids use.
EvalResult ml_eval_nu1(const MlQuery& q, int jmax) {
  const int M = q.n - q.shift;
  __float128 binom = q.beta_offset == 0 ? 1 : M;
  __float128 cp = 1;
  __float128 sum = 0;
  __float128 scale = 0;
  const __float128 c = q.c;
  for (int j = 0; j <= jmax; ++j) {
    const __float128 term = cp * binom;
    sum += term;
    const __float128 mag = term < 0 ? -term : term;
    if (mag > scale) scale = mag;
    const int k = j + q.beta_offset;
    binom = binom * (M - k) / (k + 1);
    cp *= c;
  }
  return {static_cast<long double>(sum), static_cast<long double>(scale)};
}

EvalResult ml_eval_with_table(const MlQuery& q, std::span<const long double> lg) {
  int jmax = q.n - q.shift - q.beta_offset;
  if (q.c == 0.0) jmax = std::min(jmax, 0);  // only j = 0 survives
  if (jmax < 0) return {};
  if (q.nu == 1.0) return ml_eval_nu1(q, jmax);
  if (q.n - q.shift <= kQuadHorizon) return ml_eval_quad(q, jmax);

  std::vector<long double> term_log(static_cast<std::size_t>(jmax) + 1);
  std::vector<int> term_sign(static_cast<std::size_t>(jmax) + 1);
  const long double log_abs_c =
      q.c == 0.0 ? 0.0L : std::log(std::abs(static_cast<long double>(q.c)));
  long double max_log = -std::numeric_limits<long double>::infinity();
  for (int j = 0; j <= jmax; ++j) {
    const SignedLog fp = falling_power_log(make_base_arg(ArgKind::MlBase, j, q.n - q.shift),
                                           make_base_arg(ArgKind::MlExponent, j, q.beta_offset),
                                           q.nu);
    const auto ji = static_cast<std::size_t>(j);
    if (fp.sign == 0) {
      term_sign[ji] = 0;
      continue;
    }
    int sign = fp.sign;
    if (q.c < 0.0 && (j & 1)) sign = -sign;
    term_sign[ji] = sign;
    term_log[ji] = j * log_abs_c + fp.log_abs - lg[ji];
    max_log = std::max(max_log, term_log[ji]);
  }
  if (!std::isfinite(static_cast<double>(max_log))) return {};

  KahanSum acc;
  for (int j = 0; j <= jmax; ++j) {
    const auto ji = static_cast<std::size_t>(j);
    if (term_sign[ji] == 0) continue;
    acc.add(term_sign[ji] * std::exp(term_log[ji] - max_log));
  }
  const long double scale = std::exp(max_log);
  return {acc.value_l() * scale, scale};
}

EvalResult ml_eval_full(const MlQuery& q) {
  q.validate();
  int jmax = q.n - q.shift - q.beta_offset;
  if (q.c == 0.0) jmax = std::min(jmax, 0);
  if (jmax < 0) return {};
  if (q.nu == 1.0) return ml_eval_nu1(q, jmax);
  if (q.n - q.shift <= kQuadHorizon) return ml_eval_quad(q, jmax);
  return ml_eval_with_table(q, gamma_table(q.nu, q.beta_offset, jmax));
}

}  // namespace

void MlQuery::validate() const {
  if (!(nu > 0.0 && nu <= 1.0)) throw hypothesis_error("ml_eval: 0 < nu <= 1 required");
  if (beta_offset != 0 && beta_offset != 1)
    throw hypothesis_error("ml_eval: beta_offset must be 0 or 1");
  if (n < 0 || shift < 0) throw hypothesis_error("ml_eval: n and shift must be nonnegative");
}

double ml_eval(const MlQuery& q) { return static_cast<double>(ml_eval_full(q).value); }

MlValue ml_eval_scaled(const MlQuery& q) {
  const EvalResult r = ml_eval_full(q);
  return {static_cast<double>(r.value), static_cast<double>(r.term_scale)};
}

namespace detail {

long double ml_eval_l(const MlQuery& q) { return ml_eval_full(q).value; }

std::vector<long double> ml_kernel_row_l(double nu, double c, int n,
                                         std::span<const int> r_offsets) {
  for (int r : r_offsets)
    if (r < 0 || r >= n) throw range_error("ml_kernel_row: r offset out of range");
  // The shared table only feeds the large-horizon log fallback; the nu = 1
  // and quadruple-precision paths recompute their factors per query, which
  // keeps row entries bitwise identical to standalone ml_eval calls anyway.
  const std::vector<long double> lg =
      (nu == 1.0 || n <= kQuadHorizon)
          ? std::vector<long double>{}
          : gamma_table(nu, 0, std::max(n, 0));
  std::vector<long double> row;
  row.reserve(r_offsets.size());
  for (int r : r_offsets) {
    MlQuery q{nu, 0, c, n, r + 1};
    q.validate();
    row.push_back(ml_eval_with_table(q, lg).value);
  }
  return row;
}

}  // namespace detail

std::vector<double> ml_kernel_row(double nu, double c, int n,
                                  std::span<const int> r_offsets) {
  const auto row = detail::ml_kernel_row_l(nu, c, n, r_offsets);
  return std::vector<double>(row.begin(), row.end());
}

}  // namespace dfrac
