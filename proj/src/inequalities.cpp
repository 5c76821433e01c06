#include "dfrac/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dfrac/mittag.hpp"

namespace dfrac {

namespace {

long double bernoulli_rhs(double nu, double c, int n) {
  // c (t - a)^((nu)) / Gamma(nu+1) at shifted offset n; zero at n = 0.
  const SignedLog fp = falling_power_log(ExactArg{1, n - 1}, ExactArg{1, 0}, nu);
  if (fp.sign == 0 || c == 0.0) return 0.0L;
  const SignedLog lg = lgamma_signed(nu + 1.0);
  return c * fp.sign * std::exp(fp.log_abs - lg.log_abs);
}

struct CellTask {
  double nu = 0.0;
  double c = 0.0;
  bool in_hypothesis = true;
};

struct CellResult {
  double min_gap = std::numeric_limits<double>::infinity();
  int argmin_n = 0;
  std::vector<SweepPoint> violations;  // or exploration entries
};

CellResult sweep_cell(const CellTask& task, int n_max, double tolerance) {
  CellResult res;
  for (int n = 0; n <= n_max; ++n) {
    const GapEval g = bernoulli_gap_eval(task.nu, task.c, n);
    const double normalized = g.gap / g.scale;
    if (normalized < res.min_gap) {
      res.min_gap = normalized;
      res.argmin_n = n;
    }
    // Below-hypothesis cells report negative gaps as findings, not bugs.
    if (normalized < -tolerance)
      res.violations.push_back({task.nu, task.c, n, normalized});
  }
  return res;
}

std::vector<CellTask> build_tasks(const std::vector<double>& nu_list,
                                  const CRule& rule, std::vector<double>& c_axis) {
  std::vector<CellTask> tasks;
  c_axis.clear();
  if (!rule.absolute.empty()) {
    c_axis = rule.absolute;
    for (const double nu : nu_list)
      for (const double c : rule.absolute) {
        const bool in_hyp = c >= -nu - 1e-12;
        if (!in_hyp && !rule.explore_below) continue;
        tasks.push_back({nu, c, in_hyp});
      }
    return tasks;
  }
  for (int j = 0; j <= rule.offset_count; ++j)
    c_axis.push_back(rule.offset_step * j);  // offsets from -nu
  for (const double nu : nu_list) {
    for (int j = 0; j <= rule.offset_count; ++j)
      tasks.push_back({nu, -nu + rule.offset_step * j, true});
    if (rule.explore_below)
      for (int j = 1; j <= rule.explore_count; ++j)
        tasks.push_back({nu, -nu - rule.explore_step * j, false});
  }
  return tasks;
}

SweepReport assemble(const std::vector<CellTask>& tasks,
                     const std::vector<CellResult>& results,
                     const std::vector<double>& nu_list,
                     const std::vector<double>& c_axis, int n_max,
                     double tolerance) {
  SweepReport report;
  report.nu_axis = nu_list;
  report.c_axis = c_axis;
  report.n_max = n_max;
  report.tolerance = tolerance;
  report.min_gap = std::numeric_limits<double>::quiet_NaN();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const auto& t = tasks[i];
    const auto& r = results[i];
    if (t.in_hypothesis) {
      if (r.min_gap < best) {
        best = r.min_gap;
        report.min_gap = r.min_gap;
        report.argmin = {t.nu, t.c, r.argmin_n, r.min_gap};
      }
      report.violations.insert(report.violations.end(), r.violations.begin(),
                               r.violations.end());
    } else {
      report.exploration.insert(report.exploration.end(), r.violations.begin(),
                                r.violations.end());
    }
  }
  const auto order = [](const SweepPoint& a, const SweepPoint& b) {
    if (a.nu != b.nu) return a.nu < b.nu;
    if (a.c != b.c) return a.c < b.c;
    return a.n < b.n;
  };
  std::sort(report.violations.begin(), report.violations.end(), order);
  std::sort(report.exploration.begin(), report.exploration.end(), order);
  return report;
}

}  // namespace

GapEval bernoulli_gap_eval(double nu, double c, int n) {
  const long double lhs = c * detail::ml_eval_l({nu, 1, c, n, 0});
  const long double rhs = bernoulli_rhs(nu, c, n);
  return {static_cast<double>(lhs - rhs),
          std::max(1.0, std::abs(static_cast<double>(lhs)))};
}

double bernoulli_gap(double nu, double c, int n) {
  return bernoulli_gap_eval(nu, c, n).gap;
}

GridSeq slack_sequence(double nu, double c, int N, double a) {
  FracParams params{a, nu};
  params.validate();
  GridSeq m{GridFamily::ShiftedGrid, params,
            std::vector<double>(static_cast<std::size_t>(N) + 1)};
  const SignedLog lg = lgamma_signed(nu + 1.0);
  for (int n = 0; n <= N; ++n) {
    const SignedLog fp = falling_power_log(ExactArg{1, n - 1}, ExactArg{1, 0}, nu);
    m[n] = fp.sign == 0 ? 0.0 : c * c * fp.sign * std::exp(fp.log_abs - lg.log_abs);
  }
  return m;
}

ComparisonResult comparison_check(const GridSeq& c1, const GridSeq& c2,
                                  double x0, double y0, double nu, int N,
                                  double tol) {
  if (c1.horizon() < N - 1 || c2.horizon() < N - 1)
    throw hypothesis_error("comparison_check: coefficient horizon < N - 1");
  for (int m = 0; m < N; ++m) {
    if (!(c1[m] >= c2[m] && c2[m] >= -nu))
      throw hypothesis_error("comparison_check: need c1 >= c2 >= -nu pointwise");
  }
  if (!(x0 >= y0 && y0 >= 0.0 && x0 > 0.0))
    throw hypothesis_error("comparison_check: need x0 >= y0 >= 0 with x0 > 0");

  FracParams params{c1.params.a, nu};
  const auto solve_hom = [&](const GridSeq& coeff, double init) {
    IvpSpec spec{params, init,
                 GridSeq{GridFamily::ShiftedGrid, params, coeff.values},
                 GridSeq::constant(GridFamily::ShiftedGrid, params, 0.0,
                                   std::max(N - 1, 0)),
                 N};
    return solve_oracle(spec);
  };
  const Trajectory x = solve_hom(c1, x0);
  const Trajectory y = solve_hom(c2, y0);

  ComparisonResult res;
  res.passed = true;
  res.min_gap = std::numeric_limits<double>::infinity();
  for (int n = 0; n <= N; ++n) {
    const double gap = x.values[static_cast<std::size_t>(n)] -
                       y.values[static_cast<std::size_t>(n)];
    res.min_gap = std::min(res.min_gap, gap);
    const double scale =
        std::max(1.0, std::abs(x.values[static_cast<std::size_t>(n)]));
    if (gap < -tol * scale && res.passed) {
      res.passed = false;
      res.first_violation = n;
    }
  }
  return res;
}

SweepReport bernoulli_sweep_serial(const std::vector<double>& nu_list,
                                   const CRule& rule, int n_max,
                                   double tolerance) {
  std::vector<double> c_axis;
  const auto tasks = build_tasks(nu_list, rule, c_axis);
  std::vector<CellResult> results(tasks.size());
  for (std::size_t i = 0; i < tasks.size(); ++i)
    results[i] = sweep_cell(tasks[i], n_max, tolerance);
  return assemble(tasks, results, nu_list, c_axis, n_max, tolerance);
}

SweepReport bernoulli_sweep(const std::vector<double>& nu_list, const CRule& rule,
                            int n_max, double tolerance) {
  std::vector<double> c_axis;
  const auto tasks = build_tasks(nu_list, rule, c_axis);
  std::vector<CellResult> results(tasks.size());
  const auto count = static_cast<std::int64_t>(tasks.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i)
    results[static_cast<std::size_t>(i)] =
        sweep_cell(tasks[static_cast<std::size_t>(i)], n_max, tolerance);
  return assemble(tasks, results, nu_list, c_axis, n_max, tolerance);
}

}  // namespace dfrac
