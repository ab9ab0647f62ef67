#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "nndisp/sampling.hpp"
#include "test_support.hpp"

using nndisp::Codebook;
using nndisp::CodebookKind;
using nndisp::ErrorCategory;
using nndisp::RandomStream;
using test_support::thrown_category;

TEST_SUITE("sampling") {

TEST_CASE("philox known-answer vectors") {
  // Reference vectors from the Random123 distribution (kat_vectors,
  // philox4x32-10).
  auto out = nndisp::detail::philox4x32({0, 0, 0, 0}, {0, 0});
  CHECK(out == std::array<std::uint32_t, 4>{0x6627e8d5u, 0xe169c58du,
                                            0xbc57ac4cu, 0x9b00dbd8u});

  out = nndisp::detail::philox4x32(
      {0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
      {0xffffffffu, 0xffffffffu});
  CHECK(out == std::array<std::uint32_t, 4>{0x408f276du, 0x41c83b0eu,
                                            0xa20bc7c6u, 0x6d5451fdu});

  out = nndisp::detail::philox4x32(
      {0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
      {0xa4093822u, 0x299f31d0u});
  CHECK(out == std::array<std::uint32_t, 4>{0xd16cfe09u, 0x94fdccebu,
                                            0x5001e420u, 0x24126ea1u});
}

TEST_CASE("stream determinism and independence") {
  RandomStream a(123, 5), b(123, 5), c(123, 6), d(124, 5);
  bool same_c = true, same_d = true;
  for (int i = 0; i < 64; ++i) {
    const std::uint32_t x = a.next_u32();
    CHECK(x == b.next_u32());
    same_c = same_c && (x == c.next_u32());
    same_d = same_d && (x == d.next_u32());
  }
  CHECK_FALSE(same_c);
  CHECK_FALSE(same_d);
  CHECK(a.seed() == 123);
  CHECK(a.stream_index() == 5);
}

TEST_CASE("unit draws live in [0, 1) and normals have sane moments") {
  RandomStream stream(99, 0);
  double s1 = 0, s2 = 0;
  for (int i = 0; i < 100000; ++i) {
    const double u = stream.next_unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    const double g = stream.next_normal();
    s1 += g;
    s2 += g * g;
  }
  CHECK(std::abs(s1 / 100000.0) < 0.02);
  CHECK(std::abs(s2 / 100000.0 - 1.0) < 0.03);
}

TEST_CASE("shell draws land exactly on the sphere") {
  for (const std::int64_t n : {std::int64_t{1}, std::int64_t{2}, std::int64_t{7},
                               std::int64_t{100}, std::int64_t{10000}}) {
    for (const double power : {0.25, 1.0, 4.0}) {
      RandomStream stream(31, static_cast<std::uint64_t>(n));
      const auto x = nndisp::sample_shell(n, power, stream);
      REQUIRE(x.size() == static_cast<std::size_t>(n));
      double norm2 = 0;
      for (double v : x) norm2 += v * v;
      CHECK(norm2 == doctest::Approx(static_cast<double>(n) * power)
                         .epsilon(1e-12));
    }
  }
}

TEST_CASE("one-dimensional shell is the two-point law") {
  RandomStream stream(77, 0);
  bool saw_plus = false, saw_minus = false;
  for (int i = 0; i < 200; ++i) {
    const auto x = nndisp::sample_shell(1, 4.0, stream);
    CHECK(std::abs(std::abs(x[0]) - 2.0) < 1e-14);
    saw_plus = saw_plus || x[0] > 0;
    saw_minus = saw_minus || x[0] < 0;
  }
  CHECK(saw_plus);
  CHECK(saw_minus);
}

TEST_CASE("iid draws have the requested per-symbol power") {
  RandomStream stream(55, 0);
  const double power = 2.5;
  double s2 = 0;
  const std::int64_t total = 200000;
  const auto x = nndisp::sample_iid(total, power, stream);
  for (double v : x) s2 += v * v;
  CHECK(s2 / static_cast<double>(total) == doctest::Approx(power).epsilon(0.02));
}

TEST_CASE("shell first coordinate matches the sphere marginal") {
  const std::int64_t n = 8;
  const double power = 1.0;
  const std::int64_t draws = 1000000;
  RandomStream stream(2028, 0);
  std::vector<double> first(static_cast<std::size_t>(draws));
  std::vector<double> buf(static_cast<std::size_t>(n));
  for (std::int64_t t = 0; t < draws; ++t) {
    nndisp::sample_shell(buf, power, stream);
    first[static_cast<std::size_t>(t)] = buf[0];
  }
  for (const double t : {-1.5, -0.5, 0.0, 0.5, 1.5}) {
    const double p = test_support::shell_tail_quadrature(t, n, power);
    std::int64_t count = 0;
    for (double v : first) count += v >= t;
    const double hat = static_cast<double>(count) / static_cast<double>(draws);
    const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(draws));
    CHECK(std::abs(hat - p) < 5.0 * se + 1e-9);
  }
}

TEST_CASE("shell coordinates are exchangeable") {
  const std::int64_t n = 8;
  const std::int64_t draws = 100000;
  RandomStream stream(2029, 0);
  std::vector<double> c0, c5;
  c0.reserve(static_cast<std::size_t>(draws));
  c5.reserve(static_cast<std::size_t>(draws));
  std::vector<double> buf(static_cast<std::size_t>(n));
  for (std::int64_t t = 0; t < draws; ++t) {
    nndisp::sample_shell(buf, 1.0, stream);
    c0.push_back(buf[0]);
    c5.push_back(buf[5]);
  }
  CHECK(test_support::ks_two_sample(c0, c5) < 0.01);
}

TEST_CASE("codebook dispatch matches the direct samplers") {
  RandomStream a(5, 2), b(5, 2);
  std::vector<double> via_dispatch(16), direct(16);
  nndisp::sample_codeword(via_dispatch, Codebook{CodebookKind::Shell, 3.0}, a);
  nndisp::sample_shell(direct, 3.0, b);
  CHECK(via_dispatch == direct);

  RandomStream c(5, 2), d(5, 2);
  nndisp::sample_codeword(via_dispatch, Codebook{CodebookKind::IidGaussian, 3.0}, c);
  nndisp::sample_iid(direct, 3.0, d);
  CHECK(via_dispatch == direct);
}

TEST_CASE("sampler domain errors") {
  RandomStream stream(1, 0);
  auto cat = thrown_category([&] { nndisp::sample_shell(0, 1.0, stream); });
  CHECK(cat == ErrorCategory::Domain);
  cat = thrown_category([&] { nndisp::sample_iid(0, 1.0, stream); });
  CHECK(cat == ErrorCategory::Domain);
  cat = thrown_category([&] { nndisp::sample_shell(4, 0.0, stream); });
  CHECK(cat == ErrorCategory::Domain);
  cat = thrown_category([&] { nndisp::sample_shell(4, -1.0, stream); });
  CHECK(cat == ErrorCategory::Domain);
  cat = thrown_category([&] {
    nndisp::sample_iid(4, std::numeric_limits<double>::infinity(), stream);
  });
  CHECK(cat == ErrorCategory::Domain);
}

}  // TEST_SUITE
