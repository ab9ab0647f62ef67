#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "nndisp/analytics.hpp"
#include "nndisp/delta_method.hpp"
#include "nndisp/noise.hpp"
#include "nndisp/random.hpp"
#include "test_support.hpp"

using namespace nndisp::delta_method;
using nndisp::ErrorCategory;
using nndisp::RandomStream;
using test_support::thrown_category;

TEST_SUITE("delta_method") {

TEST_CASE("quadratic form evaluation") {
  CHECK(delta_variance({{1.0}, {4.0}, {"a"}}) == 4.0);
  CHECK(delta_variance({{2.0, 3.0}, {1.0, 0.0, 0.0, 2.0}, {"a", "b"}}) == 22.0);
  // Off-diagonal terms count twice.
  CHECK(delta_variance({{1.0, 1.0}, {1.0, 0.5, 0.5, 1.0}, {"a", "b"}}) == 3.0);

  auto cat = thrown_category([] {
    delta_variance({{1.0, 2.0}, {1.0, 2.0, 3.0}, {"a", "b"}});
  });
  CHECK(cat == ErrorCategory::Domain);
  cat = thrown_category([] { delta_variance({{}, {}, {}}); });
  CHECK(cat == ErrorCategory::Domain);
}

TEST_CASE("point-to-point spec frozen values") {
  CHECK(delta_variance(p2p_spec(1.0, 3.0)) == doctest::Approx(6.0).epsilon(1e-15));
  CHECK(delta_variance(p2p_spec(1.0, 6.0)) == doctest::Approx(9.0).epsilon(1e-15));
  CHECK(delta_variance(p2p_spec(1.0, 1.0)) == doctest::Approx(4.0).epsilon(1e-15));

  const auto spec = p2p_spec(2.5, 3.0);
  REQUIRE(spec.dim() == 3);
  CHECK(spec.jacobian[0] == 2.5);
  CHECK(spec.jacobian[1] == 2.0);
  CHECK(spec.jacobian[2] == 0.0);
  CHECK(spec.labels == std::vector<std::string>{"noise_power_dev",
                                                "input_noise_cross",
                                                "input_power_dev"});

  auto cat = thrown_category([] { p2p_spec(0.0, 3.0); });
  CHECK(cat == ErrorCategory::Domain);
  cat = thrown_category([] { p2p_spec(1.0, 0.9); });
  CHECK(cat == ErrorCategory::Domain);
}

TEST_CASE("point-to-point delta variance normalizes to the shell dispersion") {
  RandomStream stream(501, 0);
  for (int i = 0; i < 100; ++i) {
    const double power = std::pow(10.0, 4.0 * stream.next_unit() - 2.0);
    const double xi = 1.0 + 11.0 * stream.next_unit();
    const double raw = delta_variance(p2p_spec(power, xi));
    const double denom = 4.0 * (power + 1.0) * (power + 1.0);
    CHECK(raw / denom ==
          doctest::Approx(nndisp::analytics::v_shell(power, xi)).epsilon(1e-12));
  }
}

TEST_CASE("interference spec frozen values and shape") {
  const std::vector<double> k1{1.0};
  CHECK(delta_variance(interference_spec(10.0, k1, 3.0)) ==
        doctest::Approx(920.0).epsilon(1e-13));
  const std::vector<double> k11{1.0, 1.0};
  CHECK(delta_variance(interference_spec(10.0, k11, 3.0)) ==
        doctest::Approx(2480.0).epsilon(1e-13));

  const auto one = interference_spec(10.0, k1, 3.0);
  REQUIRE(one.dim() == 6);  // no pair families with a single interferer
  CHECK(one.labels == std::vector<std::string>{
                          "noise_power_dev", "intended_noise_cross",
                          "intended_power_dev", "intended_interferer_cross_2",
                          "interferer_noise_cross_2", "interferer_power_dev_2"});

  const auto two = interference_spec(10.0, k11, 3.0);
  REQUIRE(two.dim() == 10);
  CHECK(two.labels.back() == "interferer_cross_2_3");
  CHECK(two.covariance.size() == 100);
}

TEST_CASE("interference delta variance normalizes to the published dispersion") {
  RandomStream stream(502, 0);
  for (int i = 0; i < 100; ++i) {
    const double p1 = std::pow(10.0, 4.0 * stream.next_unit() - 2.0);
    const double xi = 1.0 + 11.0 * stream.next_unit();
    const int k = 1 + static_cast<int>(stream.next_unit() * 4.0);
    std::vector<double> powers;
    for (int j = 0; j < k; ++j)
      powers.push_back(std::pow(10.0, 4.0 * stream.next_unit() - 2.0));
    double p_tilde = 0.0;
    for (double p : powers) p_tilde += p;
    const double raw = delta_variance(interference_spec(p1, powers, xi));
    const double t1 = p_tilde + 1.0;
    const double s1 = p1 + p_tilde + 1.0;
    const double denom = 4.0 * t1 * t1 * s1 * s1;
    CHECK(raw / denom ==
          doctest::Approx(nndisp::analytics::v_shell_interference(p1, powers, xi))
              .epsilon(1e-12));
  }
}

TEST_CASE("interference spec is invariant to interferer ordering") {
  const std::vector<double> a{2.0, 5.0, 0.5};
  const std::vector<double> b{5.0, 0.5, 2.0};
  const double va = delta_variance(interference_spec(3.0, a, 4.5));
  const double vb = delta_variance(interference_spec(3.0, b, 4.5));
  CHECK(va == doctest::Approx(vb).epsilon(1e-12));
}

TEST_CASE("interference spec validation") {
  auto cat = thrown_category([] { interference_spec(1.0, {}, 3.0); });
  CHECK(cat == ErrorCategory::Domain);
  cat = thrown_category([] {
    interference_spec(1.0, std::vector<double>{0.0}, 3.0);
  });
  CHECK(cat == ErrorCategory::Domain);
  cat = thrown_category([] {
    interference_spec(-1.0, std::vector<double>{1.0}, 3.0);
  });
  CHECK(cat == ErrorCategory::Domain);
}

TEST_CASE("folded interference kurtosis matches sampled moments") {
  // z' = (sqrt(P~) g + z) / sqrt(P~ + 1) with laplace z: fourth moment should
  // approach xi_prime(6, P~).
  const double p_tilde = 1.5;
  const double ref = nndisp::analytics::xi_prime(6.0, p_tilde);
  const auto laplace = nndisp::NoiseModel::laplace();
  RandomStream stream(503, 0);
  const double scale = 1.0 / std::sqrt(p_tilde + 1.0);
  double s4 = 0.0;
  const int draws = 1000000;
  for (int i = 0; i < draws; ++i) {
    const double z = std::sqrt(p_tilde) * stream.next_normal() +
                     laplace.sample_one(stream);
    const double v = z * scale;
    s4 += v * v * v * v;
  }
  CHECK(s4 / draws == doctest::Approx(ref).epsilon(0.02));
}

TEST_CASE("ks distance hand values") {
  std::vector<double> single{0.0};
  CHECK(ks_distance_normal(single) == doctest::Approx(0.5).epsilon(1e-12));
  std::vector<double> far{-1e9};
  CHECK(ks_distance_normal(far) == doctest::Approx(1.0).epsilon(1e-12));
  std::vector<double> empty;
  const auto cat = thrown_category([&] { ks_distance_normal(empty); });
  CHECK(cat == ErrorCategory::Domain);
}

TEST_CASE("clt check on an exact normal sum") {
  // Sum of n unit normals scaled by 1/sqrt(n) is exactly standard normal, so
  // the KS distance is pure sampling noise ~ 1/sqrt(trials).
  const auto sampler = [](std::int64_t n, RandomStream& stream) {
    double acc = 0.0;
    for (std::int64_t i = 0; i < n; ++i) acc += stream.next_normal();
    return acc;
  };
  const std::vector<std::int64_t> ns{4, 16};
  const std::int64_t trials = 20000;
  const auto result = clt_check(sampler, 1.0, ns, trials, 91);
  REQUIRE(result.points.size() == 2);
  for (const auto& p : result.points) {
    // 1.63/sqrt(T) is the 1% critical value; double it for margin.
    CHECK(p.distance < 2.0 * 1.63 / std::sqrt(static_cast<double>(trials)));
  }
}

TEST_CASE("clt check is deterministic and validates inputs") {
  const auto sampler = [](std::int64_t n, RandomStream& stream) {
    double acc = 0.0;
    for (std::int64_t i = 0; i < n; ++i) acc += stream.next_normal();
    return acc;
  };
  const std::vector<std::int64_t> ns{8};
  const auto a = clt_check(sampler, 1.0, ns, 500, 7);
  const auto b = clt_check(sampler, 1.0, ns, 500, 7);
  CHECK(a.points[0].distance == b.points[0].distance);

  auto cat = thrown_category([&] { clt_check(sampler, 0.0, ns, 500, 7); });
  CHECK(cat == ErrorCategory::Domain);
  cat = thrown_category([&] { clt_check(sampler, 1.0, {}, 500, 7); });
  CHECK(cat == ErrorCategory::Domain);
  cat = thrown_category([&] { clt_check(sampler, 1.0, ns, 1, 7); });
  CHECK(cat == ErrorCategory::Domain);
  const std::vector<std::int64_t> bad{0};
  cat = thrown_category([&] { clt_check(sampler, 1.0, bad, 500, 7); });
  CHECK(cat == ErrorCategory::Domain);
}

}  // TEST_SUITE
