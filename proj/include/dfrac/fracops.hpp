#ifndef DFRAC_FRACOPS_HPP
#define DFRAC_FRACOPS_HPP

#include <span>

#include "dfrac/grid.hpp"

namespace dfrac {

// Offset convention. A sequence f lives at offsets 0..N of its own grid.
// Operators are indexed from their own output base:
//
//   frac_sum(f, nu, n)        sum over m = 0..n-1, output base shifted by nu-1
//   frac_diff_comp(f, nu, n)  g(n+1) - g(n), g = order-(1-nu) sum of f;
//                             uses f(0..n), valid for 0 <= n <= N-1
//   frac_diff_direct(f, nu, n) single sum over m = 0..n, same output offsets
//
// Both difference forms agree at every shared offset.

/// Order-nu fractional sum at offset n. n = 0 is the empty sum.
double frac_sum(const GridSeq& f, double nu, int n);

/// Riemann-Liouville difference as forward difference of the order-(1-nu)
/// sum. For nu = 1 this is the plain forward difference.
double frac_diff_comp(const GridSeq& f, double nu, int n);

/// Riemann-Liouville difference as a single weighted sum with kernel
/// (t - sigma(k))^((-nu-1)) / Gamma(-nu). Requires 0 < nu < 1 strictly;
/// throws representation_invalid_error at nu = 1.
double frac_diff_direct(const GridSeq& f, double nu, int n);

enum class DiffForm { Composition, Direct };

/// Whole-sequence variants used by the CLI.
GridSeq frac_sum_seq(const GridSeq& f, double nu);
GridSeq frac_diff_seq(const GridSeq& f, double nu, DiffForm form);

namespace detail {
/// Order given as an exact p*nu + q pair (order = nu and order = 1 - nu are
/// the two in-scope cases). Sums m = 0..n-1 of the kernel times f[m].
/// The long double overload is for internal chained computations (series
/// solver) where intermediate rounding would otherwise accumulate.
double frac_sum_order(std::span<const double> f, ExactArg order, double nu, int n);
long double frac_sum_order(std::span<const long double> f, ExactArg order,
                           double nu, int n);
}  // namespace detail

}  // namespace dfrac

#endif
