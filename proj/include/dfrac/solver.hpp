#ifndef DFRAC_SOLVER_HPP
#define DFRAC_SOLVER_HPP

#include <optional>
#include <vector>

#include "dfrac/fracops.hpp"
#include "dfrac/grid.hpp"

namespace dfrac {

/// A linear fractional difference initial value problem on the shifted grid:
/// the order-nu difference of x equals y*x + z pointwise, with x = x0 at the
/// base point. y and z are sampled at shifted offsets 0..horizon-1 (values
/// beyond that are ignored).
struct IvpSpec {
  FracParams params;
  double x0 = 0.0;
  GridSeq y;
  GridSeq z;
  int horizon = 0;

  void validate() const;
  /// The constant value of y when y is constant.
  std::optional<double> constant_y() const;
  std::optional<double> constant_z() const;
};

enum class SolveMethod { Series, ClosedForm, Oracle };

struct Trajectory {
  IvpSpec spec;
  std::vector<double> values;  // shifted-grid offsets 0..horizon
  SolveMethod method = SolveMethod::Oracle;

  GridSeq as_seq() const {
    return {GridFamily::ShiftedGrid, spec.params, values};
  }
};

/// One application of the iterated operator: the order-nu fractional sum of
/// the pointwise product y*f, reinterpreted on the integer grid.
GridSeq apply_T(const GridSeq& y, const GridSeq& f, double nu);

/// Iterated-operator series solution.
Trajectory solve_series(const IvpSpec& spec);

/// Mittag-Leffler closed form; requires constant y.
Trajectory solve_closed_const(const IvpSpec& spec);

/// Forward recursion on the summation equation. The reference solver: any
/// disagreement beyond tolerance is a series bug, not an oracle bug.
Trajectory solve_oracle(const IvpSpec& spec);

/// Residual of the defining equation at offsets 0..horizon-2: the order-nu
/// difference of the trajectory minus (y*x + z).
std::vector<double> defining_residual(const Trajectory& traj);

}  // namespace dfrac

#endif
