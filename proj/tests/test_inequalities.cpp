#include <doctest.h>

#include <cmath>
#include <random>

#include "dfrac/inequalities.hpp"
#include "oracle.hpp"

using namespace dfrac;

TEST_CASE("bernoulli_gap vanishes at n = 0 and c = 0") {
  for (const double nu : {0.2, 0.7, 1.0}) {
    CHECK(bernoulli_gap(nu, 1.5, 0) == 0.0);
    CHECK(bernoulli_gap(nu, -nu, 0) == 0.0);
    for (int n = 0; n <= 10; ++n) CHECK(bernoulli_gap(nu, 0.0, n) == 0.0);
  }
}

TEST_CASE("bernoulli_gap at nu = 1 is the classical gap") {
  for (const double c : {-1.0, -0.5, 0.5, 2.0, 10.0})
    for (int n = 0; n <= 30; ++n) {
      const double want = std::pow(1.0 + c, n) - 1.0 - c * n;
      const double scale = std::max(1.0, std::abs(want));
      CHECK(std::abs(bernoulli_gap(1.0, c, n) - want) / scale <= 1e-10);
      CHECK(want >= 0.0);
    }
}

TEST_CASE("bernoulli_gap(0.5, -0.5, 10) matches the frozen oracle value") {
  // frozen from the 50-digit oracle
  CHECK(bernoulli_gap(0.5, -0.5, 10) == doctest::Approx(1.06085205078125).epsilon(1e-12));
  CHECK(bernoulli_gap(0.5, -0.5, 10) >= 0.0);
}

TEST_CASE("bernoulli_gap matches the 50-digit oracle on a sample box") {
  for (const double nu : {0.25, 0.6, 0.95})
    for (const double c : {-nu, -0.1, 0.3, 2.0})
      for (const int n : {1, 6, 15, 33}) {
        const double want = oracle::to_double(oracle::bernoulli_gap(nu, c, n));
        const double scale = std::max(1.0, std::abs(want));
        CHECK(std::abs(bernoulli_gap(nu, c, n) - want) / scale <= 1e-11);
      }
}

TEST_CASE("slack sequence values") {
  const GridSeq m = slack_sequence(0.5, 1.0, 6);
  CHECK(m[0] == 0.0);
  // frozen: Gamma(4.5)/(Gamma(4) Gamma(1.5)) = 35/16
  CHECK(m[4] == doctest::Approx(2.1875).epsilon(1e-13));
  const GridSeq z = slack_sequence(0.7, 0.0, 5);
  for (int n = 0; n <= 5; ++n) CHECK(z[n] == 0.0);
}

TEST_CASE("slack sequence is nonnegative for every real c") {
  for (double nu = 0.1; nu <= 1.0 + 1e-12; nu += 0.1)
    for (const double c : {-2.0, -nu, 0.0, 1.0, 5.0}) {
      const GridSeq m = slack_sequence(nu, c, 40);
      for (int n = 0; n <= 40; ++n) CHECK(m[n] >= 0.0);
    }
}

TEST_CASE("comparison_check trivial equality instance") {
  const FracParams params{0.0, 0.5};
  const GridSeq c = GridSeq::constant(GridFamily::ShiftedGrid, params, 0.3, 9);
  const auto res = comparison_check(c, c, 1.0, 1.0, 0.5, 10);
  CHECK(res.passed);
  CHECK(res.min_gap == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("comparison_check nu = 1 closed form: 2^n >= 1") {
  const FracParams params{0.0, 1.0};
  const GridSeq c1 = GridSeq::constant(GridFamily::ShiftedGrid, params, 1.0, 11);
  const GridSeq c2 = GridSeq::constant(GridFamily::ShiftedGrid, params, 0.0, 11);
  const auto res = comparison_check(c1, c2, 1.0, 1.0, 1.0, 12);
  CHECK(res.passed);
  CHECK(res.min_gap == doctest::Approx(0.0).epsilon(1e-13));  // gap at n = 0
}

TEST_CASE("comparison_check passes on random admissible instances") {
  std::mt19937 rng(424242);
  std::uniform_real_distribution<double> nu_dist(0.05, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const double nu = nu_dist(rng);
    const int N = 1 + static_cast<int>(unit(rng) * 20);
    const FracParams params{0.0, nu};
    GridSeq c2{GridFamily::ShiftedGrid, params,
               std::vector<double>(static_cast<std::size_t>(N))};
    GridSeq c1 = c2;
    for (int m = 0; m < N; ++m) {
      c2[m] = -nu + 3.0 * unit(rng);
      c1[m] = c2[m] + 2.0 * unit(rng);
    }
    const double y0 = (trial % 5 == 0) ? 0.0 : 2.0 * unit(rng);  // y0 = 0 allowed
    const double x0 = y0 + 2.0 * unit(rng) + 1e-6;
    const auto res = comparison_check(c1, c2, x0, y0, nu, N);
    CHECK(res.passed);
  }
}

TEST_CASE("comparison_check rejects out-of-hypothesis inputs") {
  const FracParams params{0.0, 0.5};
  const GridSeq lo = GridSeq::constant(GridFamily::ShiftedGrid, params, -1.0, 5);
  const GridSeq hi = GridSeq::constant(GridFamily::ShiftedGrid, params, 1.0, 5);
  CHECK_THROWS_AS(comparison_check(hi, lo, 1.0, 0.5, 0.5, 5), hypothesis_error);  // c2 < -nu
  CHECK_THROWS_AS(comparison_check(lo, hi, 1.0, 0.5, 0.5, 5), hypothesis_error);  // c1 < c2
  CHECK_THROWS_AS(comparison_check(hi, hi, 0.0, 0.0, 0.5, 5), hypothesis_error);  // x0 = 0
  CHECK_THROWS_AS(comparison_check(hi, hi, 1.0, 2.0, 0.5, 5), hypothesis_error);  // x0 < y0
}

TEST_CASE("bernoulli_sweep finds no violations on the default grid") {
  std::vector<double> nus{0.25, 0.5, 0.75, 1.0};
  CRule rule;
  rule.offset_count = 20;
  const SweepReport report = bernoulli_sweep(nus, rule, 25, 1e-9);
  CHECK(report.violations.empty());
  CHECK(report.min_gap >= -1e-9);
  CHECK(report.nu_axis == nus);
}

TEST_CASE("parallel sweep matches the serial reference bitwise") {
  std::vector<double> nus{0.1, 0.45, 0.8, 1.0};
  CRule rule;
  rule.offset_count = 15;
  rule.explore_below = true;
  rule.explore_count = 4;
  const SweepReport a = bernoulli_sweep_serial(nus, rule, 20, 1e-9);
  const SweepReport b = bernoulli_sweep(nus, rule, 20, 1e-9);
  CHECK(a.min_gap == b.min_gap);
  CHECK(a.argmin.nu == b.argmin.nu);
  CHECK(a.argmin.c == b.argmin.c);
  CHECK(a.argmin.n == b.argmin.n);
  REQUIRE(a.violations.size() == b.violations.size());
  REQUIRE(a.exploration.size() == b.exploration.size());
  for (std::size_t i = 0; i < a.exploration.size(); ++i) {
    CHECK(a.exploration[i].c == b.exploration[i].c);
    CHECK(a.exploration[i].gap == b.exploration[i].gap);
  }
}

TEST_CASE("exploration points never count as violations") {
  std::vector<double> nus{0.5};
  CRule rule;
  rule.offset_count = 5;
  rule.explore_below = true;
  rule.explore_count = 8;
  rule.explore_step = 0.5;
  const SweepReport report = bernoulli_sweep_serial(nus, rule, 30, 1e-9);
  CHECK(report.violations.empty());
  for (const auto& p : report.exploration) CHECK(p.c < -0.5);
}

TEST_CASE("empty nu list yields an empty report") {
  const SweepReport report = bernoulli_sweep_serial({}, CRule{}, 10, 1e-9);
  CHECK(report.violations.empty());
  CHECK(std::isnan(report.min_gap));
}

TEST_CASE("absolute c grid classifies hypothesis membership per nu") {
  std::vector<double> nus{0.5};
  CRule rule;
  rule.absolute = {-1.0, -0.5, 0.0, 2.0};
  rule.explore_below = true;
  const SweepReport report = bernoulli_sweep_serial(nus, rule, 15, 1e-9);
  CHECK(report.violations.empty());
  // c = -1.0 < -nu: only reachable through the exploration channel
  for (const auto& p : report.exploration) CHECK(p.c == -1.0);
}
