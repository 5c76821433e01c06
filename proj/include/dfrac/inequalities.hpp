#ifndef DFRAC_INEQUALITIES_HPP
#define DFRAC_INEQUALITIES_HPP

#include <vector>

#include "dfrac/grid.hpp"
#include "dfrac/solver.hpp"

namespace dfrac {

/// Left side, right side, and scale of one generalized Bernoulli instance
///   c E(t, a, nu, nu+1, c, a)  >=  c (t-a)^((nu)) / Gamma(nu+1).
struct GapEval {
  double gap = 0.0;    // lhs - rhs
  double scale = 1.0;  // max(1, |lhs|)
};

GapEval bernoulli_gap_eval(double nu, double c, int n);
double bernoulli_gap(double nu, double c, int n);

/// The proof's slack function m at shifted offsets 0..N:
/// m = c^2 (t + nu - 1 - a)^((nu)) / Gamma(nu+1), nonnegative for every c.
GridSeq slack_sequence(double nu, double c, int N, double a = 0.0);

struct ComparisonResult {
  bool passed = false;
  double min_gap = 0.0;       // min over n of x(n) - y(n)
  int first_violation = -1;   // offset, or -1 when none
};

/// Jia comparison check: solves both homogeneous problems by forward
/// recursion and verifies x >= y - tol*scale pointwise. Throws
/// hypothesis_error when c1 >= c2 >= -nu or x0 >= y0 >= 0, x0 > 0 fails.
ComparisonResult comparison_check(const GridSeq& c1, const GridSeq& c2,
                                  double x0, double y0, double nu, int N,
                                  double tol = 1e-10);

/// How the c axis of a sweep is generated for each nu.
struct CRule {
  // Offset grid c = -nu + offset_step * j, j = 0..offset_count.
  double offset_step = 0.1;
  int offset_count = 60;
  // Absolute c values; when nonempty they replace the offset grid.
  std::vector<double> absolute;
  // Points below -nu: quarantined exploration, never counted as violations.
  bool explore_below = false;
  double explore_step = 0.1;
  int explore_count = 10;
};

struct SweepPoint {
  double nu = 0.0;
  double c = 0.0;
  int n = 0;
  double gap = 0.0;  // normalized gap / scale
};

struct SweepReport {
  std::vector<double> nu_axis;
  std::vector<double> c_axis;  // offsets (or absolute values) actually used
  int n_max = 0;
  double tolerance = 0.0;
  double min_gap = 0.0;  // normalized; NaN when the sweep is empty
  SweepPoint argmin;
  std::vector<SweepPoint> violations;   // in-hypothesis points with gap < -tolerance
  std::vector<SweepPoint> exploration;  // below-hypothesis points, reported only
};

/// Serial reference sweep.
SweepReport bernoulli_sweep_serial(const std::vector<double>& nu_list,
                                   const CRule& rule, int n_max, double tolerance);

/// OpenMP sweep over (nu, c) pairs; results are merged in deterministic
/// (nu, c, n) order and match the serial reference bitwise.
SweepReport bernoulli_sweep(const std::vector<double>& nu_list, const CRule& rule,
                            int n_max, double tolerance);

}  // namespace dfrac

#endif
