#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "dfrac/mittag.hpp"
#include "oracle.hpp"

using namespace dfrac;

namespace {

// C(n, j) c^j binomial reduction of E at nu = 1.
double binomial_sum_b0(double c, int n) {
  double acc = 0.0, coeff = 1.0;
  for (int j = 0; j <= n; ++j) {
    acc += coeff * std::pow(c, j);
    coeff = coeff * (n - j) / (j + 1);
  }
  return acc;
}

}  // namespace

TEST_CASE("ml_eval at n = 0 is the initial normalization") {
  for (const double nu : {0.1, 0.5, 1.0})
    for (const double c : {-3.0, 0.0, 0.5, 7.0})
      CHECK(ml_eval({nu, 0, c, 0, 0}) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("ml_eval nu = 1, b = 1: c E = (1+c)^n - 1") {
  for (const double c : {-0.5, 1.0, 2.0})
    for (int n = 0; n <= 12; ++n) {
      const double want = (std::pow(1.0 + c, n) - 1.0) / c;
      CHECK(ml_eval({1.0, 1, c, n, 0}) == doctest::Approx(want).epsilon(1e-12));
    }
}

TEST_CASE("ml_eval nu = 1, b = 0 reduces to the binomial expansion") {
  for (const double c : {-1.5, -0.25, 0.75, 3.0})
    for (int n = 0; n <= 15; ++n) {
      const double want = binomial_sum_b0(c, n);
      const double scale = std::max(1.0, std::abs(want));
      CHECK(std::abs(ml_eval({1.0, 0, c, n, 0}) - want) / scale <= 1e-12);
    }
}

TEST_CASE("ml_eval nu = 0.5, c = 1, n = 3") {
  // frozen from the 50-digit oracle (exactly 61/16)
  CHECK(ml_eval({0.5, 0, 1.0, 3, 0}) == doctest::Approx(3.8125).epsilon(1e-13));
}

TEST_CASE("ml_eval matches the 50-digit oracle across the parameter box") {
  for (const double nu : {0.15, 0.5, 0.85})
    for (const double c : {-1.8, -0.3, 0.0, 1.1, 4.0})
      for (const int n : {1, 4, 9, 17})
        for (const int shift : {0, 1, 3}) {
          const MlQuery q{nu, 0, c, n, shift};
          const double want = oracle::to_double(oracle::ml_eval(q));
          const double scale = std::max(1.0, std::abs(want));
          CHECK(std::abs(ml_eval(q) - want) / scale <= 1e-12);
        }
}

TEST_CASE("c = 0 short-circuit keeps only the j = 0 term") {
  for (const double nu : {0.3, 1.0})
    for (int n = 0; n <= 6; ++n) {
      const double only_term =
          falling_power(make_base_arg(ArgKind::MlBase, 0, n),
                        make_base_arg(ArgKind::MlExponent, 0, 0), nu) /
          std::exp(lgamma_signed(nu).log_abs);
      CHECK(ml_eval({nu, 0, 0.0, n, 0}) == doctest::Approx(only_term).epsilon(1e-13));
    }
}

TEST_CASE("vanishing tail: truncation at j = n - shift changes nothing") {
  // The implementation skips exact-zero terms; summing them explicitly via
  // the oracle confirms they contribute nothing.
  for (const int shift : {0, 2, 5}) {
    const MlQuery q{0.35, 0, 1.7, 8, shift};
    const double full = oracle::to_double(oracle::ml_eval(q));
    CHECK(ml_eval(q) == doctest::Approx(full).epsilon(1e-12));
  }
  // shift beyond n leaves an empty sum
  CHECK(ml_eval({0.5, 0, 2.0, 3, 7}) == 0.0);
}

TEST_CASE("telescoping: sum of sigma-shifted kernels equals the beta = nu+1 value") {
  for (int k = 1; k <= 10; ++k) {
    const double nu = 0.1 * k;  // lands exactly on 1.0 at k = 10
    for (const double c : {-2.0, -0.7, 0.4, 2.3, 5.0})
      for (const int n : {1, 7, 20, 40}) {
        KahanSum acc;
        for (int r = 0; r < n; ++r) acc.add(ml_eval({nu, 0, c, n, r + 1}));
        const double rhs = ml_eval({nu, 1, c, n, 0});
        const double scale = std::max(1.0, std::abs(rhs));
        CHECK(std::abs(acc.value() - rhs) / scale <= 1e-10);
      }
  }
}

TEST_CASE("positivity of E(t,a,nu,nu,c,a) for c >= -nu") {
  for (double nu = 0.1; nu <= 1.0 + 1e-12; nu += 0.1)
    for (int j = 0; j <= 30; ++j) {
      const double c = -nu + 0.2 * j;
      for (int n = 0; n <= 40; ++n) {
        // tolerance relative to the largest term in the sum
        const MlValue v = ml_eval_scaled({nu, 0, c, n, 0});
        CHECK(v.value >= -1e-9 * std::max(1.0, v.term_scale));
      }
    }
}

TEST_CASE("ml_kernel_row equals individual ml_eval calls exactly") {
  std::vector<int> offsets(12);
  std::iota(offsets.begin(), offsets.end(), 0);
  for (const double nu : {0.25, 0.6, 1.0})
    for (const double c : {-1.2, 0.0, 2.5}) {
      const auto row = ml_kernel_row(nu, c, 12, offsets);
      REQUIRE(row.size() == offsets.size());
      for (std::size_t i = 0; i < row.size(); ++i)
        CHECK(row[i] == ml_eval({nu, 0, c, 12, offsets[static_cast<int>(i)] + 1}));
    }
}

TEST_CASE("ml_kernel_row trivial single-term case") {
  const std::vector<int> r{0};
  for (const double nu : {0.2, 0.9})
    for (const double c : {-4.0, 0.0, 3.0})
      CHECK(ml_kernel_row(nu, c, 1, r)[0] == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("ml_kernel_row at nu = 1 gives (1+c)^(n-1-r)") {
  const int n = 9;
  std::vector<int> offsets(static_cast<std::size_t>(n));
  std::iota(offsets.begin(), offsets.end(), 0);
  for (const double c : {-0.4, 1.0, 2.0}) {
    const auto row = ml_kernel_row(1.0, c, n, offsets);
    for (int r = 0; r < n; ++r)
      CHECK(row[static_cast<std::size_t>(r)] ==
            doctest::Approx(std::pow(1.0 + c, n - 1 - r)).epsilon(1e-12));
  }
}

TEST_CASE("invalid queries are rejected") {
  CHECK_THROWS_AS(ml_eval({0.0, 0, 1.0, 1, 0}), hypothesis_error);
  CHECK_THROWS_AS(ml_eval({0.5, 2, 1.0, 1, 0}), hypothesis_error);
  CHECK_THROWS_AS(ml_eval({0.5, 0, 1.0, -1, 0}), hypothesis_error);
  const std::vector<int> bad{5};
  CHECK_THROWS_AS(ml_kernel_row(0.5, 1.0, 3, bad), range_error);
}
