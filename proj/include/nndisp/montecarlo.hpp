#ifndef NNDISP_MONTECARLO_HPP
#define NNDISP_MONTECARLO_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "nndisp/noise.hpp"
#include "nndisp/random.hpp"
#include "nndisp/sampling.hpp"

namespace nndisp::montecarlo {

// One channel configuration: the intended sender, any number of interfering
// senders (decoded by nobody here; receiver 1 treats them as noise), and the
// additive noise law.
struct Scenario {
  Codebook intended;
  std::vector<Codebook> interferers;
  NoiseModel noise;
};

struct MCEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  std::string method;  // "semi_analytic" | "brute_force" | "statistic"
};

// Ensemble error probability, Rao-Blackwellized over the codebook: per trial
// the channel realization (intended codeword, interferers, noise) is sampled
// and the conditional error over M-1 independent competitors is evaluated in
// closed form from (p_y_hat, p_z_hat).  M is real-valued through log_m.
MCEstimate simulate_semi_analytic(const Scenario& scenario, std::int64_t n,
                                  double log_m, std::int64_t trials,
                                  std::uint64_t seed);

struct BruteForceOptions {
  bool zero_noise = false;  // test hook: the noise vector is replaced by zeros
};

// Materialized nearest-neighbor decoding oracle: per trial draw a fresh
// codebook of M codewords, transmit word 1, decode by minimum distance.  A
// tie with the transmitted codeword does not count as an error.
MCEstimate simulate_brute_force(const Scenario& scenario, std::int64_t n,
                                std::int64_t m, std::int64_t trials,
                                std::uint64_t seed,
                                const BruteForceOptions& options = {});

// Per-symbol sample variance of the decoding statistic
//   (P1 + P~ + 1) ||y - x1||^2 - (P~ + 1) ||y||^2,
// which reduces to P ||z||^2 - nP - 2<x, z> without interferers.  Requires a
// shell intended codebook (the statistic is zero-mean only on the shell).
MCEstimate statistic_variance(const Scenario& scenario, std::int64_t n,
                              std::int64_t trials, std::uint64_t seed);

// The raw statistic above for a single trial, in the shape clt_check expects.
std::function<double(std::int64_t, RandomStream&)> statistic_sampler(
    const Scenario& scenario);

// Concentration diagnostic for the empirical powers of a point-to-point shell
// transmission: how often (p_y_hat, p_z_hat) leaves each typical window.
//   y-window: |p_y - (P+1)| <= sqrt((xi-1+4P) log n / n)
//   z-window: |p_z - 1|     <= sqrt((xi-1)    log n / n)
//   q-set:    p_y + P - p_z > eta,  eta in (0, 2P)
struct TypicalSetDiagnostic {
  double freq_y = 0.0;
  double freq_z = 0.0;
  double freq_q = 0.0;
  double freq_total = 0.0;  // outside the intersection of all three
  double q_envelope = 0.0;  // exp(-n (2P-eta)^2 / (8P)) + 1/sqrt(n)
  std::int64_t n = 0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
};

TypicalSetDiagnostic typical_set_diagnostic(double power, const NoiseModel& noise,
                                            std::int64_t n, double eta,
                                            std::int64_t trials,
                                            std::uint64_t seed);

}  // namespace nndisp::montecarlo

#endif
