#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "nndisp/analytics.hpp"
#include "nndisp/exact_error.hpp"
#include "nndisp/random.hpp"
#include "test_support.hpp"

using namespace nndisp::exact_error;
using nndisp::ErrorCategory;
using nndisp::RandomStream;
using test_support::thrown_category;

TEST_SUITE("exact_error") {

TEST_CASE("shell tail frozen value") {
  CHECK(shell_tail(1.0, 8, 1.0) ==
        doctest::Approx(0.17530833141010374).epsilon(1e-12));
}

TEST_CASE("shell tail agrees with direct quadrature of the sphere marginal") {
  struct Point {
    double t;
    std::int64_t n;
    double power;
  };
  const std::vector<Point> grid{
      {0.3, 8, 1.0}, {1.0, 8, 1.0}, {-1.0, 12, 2.0}, {2.5, 40, 1.7}, {0.0, 9, 1.0}};
  for (const auto& p : grid) {
    const double via_beta = shell_tail(p.t, p.n, p.power);
    const double via_quad = test_support::shell_tail_quadrature(p.t, p.n, p.power);
    CHECK(std::abs(via_beta - via_quad) < 1e-9);
  }
}

TEST_CASE("shell tail boundaries and symmetry") {
  CHECK(shell_tail(0.0, 8, 1.0) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(shell_tail(3.0, 9, 1.0) == 0.0);   // at the radius
  CHECK(shell_tail(4.0, 9, 1.0) == 0.0);   // beyond it
  CHECK(shell_tail(-3.0, 9, 1.0) == 1.0);
  CHECK(shell_tail(1.2, 10, 1.0) + shell_tail(-1.2, 10, 1.0) ==
        doctest::Approx(1.0).epsilon(1e-12));
  // n = 2 is the circle: Pr[X1 >= 1] with radius sqrt(2) covers a quarter arc.
  CHECK(shell_tail(1.0, 2, 1.0) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(shell_tail(0.0, 2, 1.0) == doctest::Approx(0.5).epsilon(1e-13));

  auto cat = thrown_category([] { shell_tail(0.0, 1, 1.0); });
  CHECK(cat == ErrorCategory::Domain);
  cat = thrown_category([] { shell_tail(0.0, 8, 0.0); });
  CHECK(cat == ErrorCategory::Domain);
  cat = thrown_category([] { shell_tail(std::nan(""), 8, 1.0); });
  CHECK(cat == ErrorCategory::Domain);
}

TEST_CASE("competitor probabilities at a frozen conditioning point") {
  const EmpiricalPowers ep{2.0, 1.0, 8, 1.0};
  CHECK(psi_shell(ep) == doctest::Approx(0.016572750131886842).epsilon(1e-12));
  CHECK(psi_iid(ep) == doctest::Approx(0.013106033529379418).epsilon(1e-10));
}

TEST_CASE("psi validation") {
  auto cat = thrown_category([] { psi_shell({0.0, 1.0, 8, 1.0}); });
  CHECK(cat == ErrorCategory::Domain);
  cat = thrown_category([] { psi_shell({2.0, -1.0, 8, 1.0}); });
  CHECK(cat == ErrorCategory::Domain);
  cat = thrown_category([] { psi_iid({2.0, 1.0, 0, 1.0}); });
  CHECK(cat == ErrorCategory::Domain);
  cat = thrown_category([] { psi_iid({2.0, 1.0, 8, -2.0}); });
  CHECK(cat == ErrorCategory::Domain);
  // Zero output power is fine for the iid competitor (central chi-square).
  CHECK(psi_iid({0.0, 1.0, 8, 1.0}) > 0.0);
}

TEST_CASE("conditional ensemble error frozen value and series oracle") {
  CHECK(conditional_error(1e-9, 1000000) ==
        doctest::Approx(0.00099949916812400775).epsilon(1e-13));
  for (const auto& [psi, m] : std::vector<std::pair<double, std::int64_t>>{
           {1e-9, 1000000}, {3e-8, 1000}, {1e-4, 50}, {2e-6, 4096}}) {
    const double series = static_cast<double>(
        test_support::conditional_error_series(static_cast<long double>(psi), m));
    CHECK(conditional_error(psi, m) == doctest::Approx(series).epsilon(1e-12));
  }
}

TEST_CASE("conditional error bounds and monotonicity") {
  RandomStream stream(419, 0);
  for (int i = 0; i < 200; ++i) {
    const double psi = std::pow(10.0, -12.0 + 6.0 * stream.next_unit());
    const std::int64_t m = 2 + static_cast<std::int64_t>(stream.next_unit() * 1e6);
    const double k_psi = static_cast<double>(m - 1) * psi;
    const double p = conditional_error(psi, m);
    CHECK(p <= k_psi * (1.0 + 1e-12));
    CHECK(p >= (k_psi - 0.5 * k_psi * k_psi) * (1.0 - 1e-12));
  }
  CHECK(conditional_error(0.3, 2) == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(conditional_error(0.0, 100) == 0.0);
  CHECK(conditional_error(1.0, 5) == 1.0);
  CHECK(conditional_error(0.5, 1) == 0.0);
  CHECK(conditional_error(1e-3, 100) < conditional_error(1e-3, 101));
  CHECK(conditional_error(1e-3, 100) < conditional_error(2e-3, 100));

  auto cat = thrown_category([] { conditional_error(1.5, 10); });
  CHECK(cat == ErrorCategory::Domain);
  cat = thrown_category([] { conditional_error(-0.1, 10); });
  CHECK(cat == ErrorCategory::Domain);
  cat = thrown_category([] { conditional_error(0.5, 0); });
  CHECK(cat == ErrorCategory::Domain);
}

TEST_CASE("real-valued codebook size matches integer sizes") {
  for (const std::int64_t m : {std::int64_t{2}, std::int64_t{10}, std::int64_t{1000}}) {
    const double log_m = std::log(static_cast<double>(m));
    CHECK(conditional_error_log_m(1e-3, log_m) ==
          doctest::Approx(conditional_error(1e-3, m)).epsilon(1e-11));
  }
  CHECK(conditional_error_log_m(0.3, 0.0) == 0.0);
  CHECK(conditional_error_log_m(0.0, 5.0) == 0.0);
  CHECK(conditional_error_log_m(1.0, 5.0) == 1.0);
  // Overwhelming codebook sizes saturate.
  CHECK(conditional_error_log_m(1e-12, 30.0) ==
        doctest::Approx(0.9999771480608874).epsilon(1e-10));
  CHECK(conditional_error_log_m(1e-12, 30.0) <= 1.0);
  // Log-domain branch: M - 1 overflows a double but the product stays O(1).
  const double tiny_psi = std::exp(-720.0);
  CHECK(conditional_error_log_m(tiny_psi, 720.0) ==
        doctest::Approx(0.6321205588285577).epsilon(1e-9));

  auto cat = thrown_category([] { conditional_error_log_m(0.5, -1.0); });
  CHECK(cat == ErrorCategory::Domain);
  cat = thrown_category([] {
    conditional_error_log_m(0.5, std::numeric_limits<double>::infinity());
  });
  CHECK(cat == ErrorCategory::Domain);
}

TEST_CASE("exponent equals capacity at the channel center") {
  for (const double power : {0.5, 1.0, 4.0}) {
    const auto r = ld_exponent({power + 1.0, 1.0, 100, power});
    CHECK(r.s_star == doctest::Approx(power / 2.0).epsilon(1e-12));
    CHECK(r.exponent ==
          doctest::Approx(nndisp::analytics::capacity(power)).epsilon(1e-12));
  }
}

namespace {

double chernoff_objective(double s, double py, double pz, double power) {
  return py * s / (power * (1.0 + 2.0 * s)) + 0.5 * std::log1p(2.0 * s) -
         s * pz / power;
}

}  // namespace

TEST_CASE("closed-form maximizer matches a one-dimensional search") {
  RandomStream stream(420, 0);
  const double power = 1.0;
  for (int i = 0; i < 100; ++i) {
    const double py = power + 1.0 + 0.6 * (stream.next_unit() - 0.5);
    const double pz = 1.0 + 0.4 * (stream.next_unit() - 0.5);
    const auto r = ld_exponent({py, pz, 64, power});
    const auto f = [&](double s) { return chernoff_objective(s, py, pz, power); };
    const double s_numeric = test_support::argmax_smooth(f, 0.0, 5.0);
    CHECK(std::abs(r.s_star - s_numeric) < 1e-8);
    CHECK(r.exponent == doctest::Approx(f(r.s_star)).epsilon(1e-14));
    // Local maximum property.
    CHECK(r.exponent >= f(r.s_star + 1e-4) - 1e-15);
    CHECK(r.exponent >= f(std::max(0.0, r.s_star - 1e-4)) - 1e-15);
  }
}

TEST_CASE("maximizer clamps to zero when the tilt is unfavorable") {
  // Large empirical distance power pushes the unconstrained optimum negative.
  const auto r = ld_exponent({0.5, 8.0, 16, 1.0});
  CHECK(r.s_star == 0.0);
  CHECK(r.exponent == 0.0);
}

TEST_CASE("first-order expansion residual decays quadratically") {
  const double power = 1.0;
  std::vector<double> log_h, log_r;
  for (const double h : {0.1, 0.05, 0.025, 0.0125}) {
    const EmpiricalPowers ep{(power + 1.0) * (1.0 + 0.6 * h), 1.0 - 0.4 * h, 64,
                             power};
    const double residual =
        std::abs(ld_exponent(ep).exponent - exponent_taylor_ref(ep));
    REQUIRE(residual > 0.0);
    log_h.push_back(std::log(h));
    log_r.push_back(std::log(residual));
  }
  const double slope = test_support::least_squares_slope(log_h, log_r);
  CHECK(slope > 1.8);
  CHECK(slope < 2.2);

  auto cat = thrown_category([] { ld_exponent({2.0, 0.0, 8, 1.0}); });
  CHECK(cat == ErrorCategory::Domain);
}

TEST_CASE("shell exponent is the blocklength limit of the competitor tail") {
  const double py = 1.8, pz = 0.9, power = 1.0;
  const double limit = shell_log_psi_exponent({py, pz, 2, power});
  std::vector<double> log_n, log_gap;
  for (const std::int64_t n : {std::int64_t{16}, std::int64_t{64}, std::int64_t{256},
                               std::int64_t{1024}}) {
    const double psi = psi_shell({py, pz, n, power});
    const double rate = -std::log(2.0 * psi) / static_cast<double>(n);
    const double gap = std::abs(rate - limit);
    REQUIRE(gap > 0.0);
    log_n.push_back(std::log(static_cast<double>(n)));
    log_gap.push_back(std::log(gap));
  }
  CHECK(test_support::least_squares_slope(log_n, log_gap) < -0.7);

  auto cat = thrown_category([] { shell_log_psi_exponent({1.0, 4.5, 8, 1.0}); });
  CHECK(cat == ErrorCategory::Domain);
}

}  // TEST_SUITE
