#ifndef DFRAC_GRID_HPP
#define DFRAC_GRID_HPP

#include <cstdint>
#include <vector>

#include "dfrac/errors.hpp"
#include "dfrac/special.hpp"

namespace dfrac {

/// Base point a and order nu of one fractional-calculus setting.
struct FracParams {
  double a = 0.0;
  double nu = 1.0;

  void validate() const {
    if (!(nu > 0.0 && nu <= 1.0))
      throw hypothesis_error("order nu must satisfy 0 < nu <= 1");
  }
  friend bool operator==(const FracParams&, const FracParams&) = default;
};

enum class GridFamily {
  IntegerGrid,  // points a + n
  ShiftedGrid,  // points a + nu - 1 + n
};

/// A finite real sequence indexed by nonnegative integer offsets on one of
/// the two time scales. All index arithmetic is on integers; a and nu never
/// enter it.
struct GridSeq {
  GridFamily family = GridFamily::IntegerGrid;
  FracParams params;
  std::vector<double> values;

  int horizon() const { return static_cast<int>(values.size()) - 1; }

  double point(int n) const {
    return family == GridFamily::IntegerGrid ? params.a + n
                                             : params.a + params.nu - 1.0 + n;
  }

  double operator[](int n) const { return values[static_cast<std::size_t>(n)]; }
  double& operator[](int n) { return values[static_cast<std::size_t>(n)]; }

  static GridSeq constant(GridFamily fam, FracParams p, double value, int horizon) {
    return {fam, p, std::vector<double>(static_cast<std::size_t>(horizon) + 1, value)};
  }
};

/// The three argument shapes the power function is called with.
enum class ArgKind {
  SumKernel,   // t - sigma(s): indices (n, m)  ->  nu - 1 + (n - 1 - m)
  MlBase,      // t - lambda + j(nu-1): indices (j, d) -> (j+1)(nu-1) + d
  MlExponent,  // j nu + beta - 1, beta = nu + b: indices (j, b) -> (j+1)nu - 1 + b
};

inline ExactArg make_base_arg(ArgKind kind, std::int64_t i1, std::int64_t i2) {
  switch (kind) {
    case ArgKind::SumKernel:
      return {1, i1 - i2 - 2};
    case ArgKind::MlBase:
      return {i1 + 1, i2 - i1 - 1};
    case ArgKind::MlExponent:
      return {i1 + 1, i2 - 1};
  }
  throw std::invalid_argument("unknown ArgKind");
}

}  // namespace dfrac

#endif
