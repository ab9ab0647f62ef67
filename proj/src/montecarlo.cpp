#include "nndisp/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "nndisp/error.hpp"
#include "nndisp/exact_error.hpp"
#include "nndisp/parallel.hpp"

namespace nndisp::montecarlo {

namespace {

constexpr std::size_t kMaxSenders = 16;
constexpr std::int64_t kBruteForceMaxM = std::int64_t{1} << 14;

void validate_scenario(const Scenario& sc) {
  if (!(sc.intended.power > 0.0) || !std::isfinite(sc.intended.power))
    throw_domain("intended power must be positive and finite");
  for (const Codebook& cb : sc.interferers)
    if (!(cb.power > 0.0) || !std::isfinite(cb.power))
      throw_domain("interferer powers must be positive and finite");
  if (1 + sc.interferers.size() > kMaxSenders)
    throw_guard("scenario exceeds the supported sender count (16)");
}

void check_common(std::int64_t n, std::int64_t trials) {
  if (n < 1) throw_domain("blocklength must be at least 1");
  if (trials < 1) throw_domain("trial count must be at least 1");
}

// All pairwise inner products of the raw (unit-scale) sender vectors and the
// noise, accumulated in one pass over the symbols so a trial needs no
// per-symbol storage.  Senders are rescaled to their codebooks afterwards.
struct TrialGram {
  std::size_t k = 0;                      // sender count, intended first
  double gg[kMaxSenders];                 // ||g_j||^2
  double gz[kMaxSenders];                 // <g_j, z>
  double gram[kMaxSenders][kMaxSenders];  // <g_j, g_l> for j < l
  double zz = 0.0;                        // ||z||^2
};

void accumulate_gram(const Scenario& sc, std::int64_t n, RandomStream& stream,
                     TrialGram& g) {
  const std::size_t k = 1 + sc.interferers.size();
  g.k = k;
  g.zz = 0.0;
  for (std::size_t j = 0; j < k; ++j) {
    g.gg[j] = 0.0;
    g.gz[j] = 0.0;
    for (std::size_t l = j + 1; l < k; ++l) g.gram[j][l] = 0.0;
  }
  double v[kMaxSenders];
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) v[j] = stream.next_normal();
    const double z = sc.noise.sample_one(stream);
    for (std::size_t j = 0; j < k; ++j) {
      g.gg[j] += v[j] * v[j];
      g.gz[j] += v[j] * z;
      for (std::size_t l = j + 1; l < k; ++l) g.gram[j][l] += v[j] * v[l];
    }
    g.zz += z * z;
  }
}

bool needs_resample(const Scenario& sc, const TrialGram& g) {
  if (sc.intended.kind == CodebookKind::Shell && g.gg[0] == 0.0) return true;
  for (std::size_t j = 0; j < sc.interferers.size(); ++j)
    if (sc.interferers[j].kind == CodebookKind::Shell && g.gg[j + 1] == 0.0)
      return true;
  return false;
}

struct TrialDerived {
  double yy;         // ||y||^2
  double ee;         // ||y - x1||^2
  double statistic;  // (P1+P~+1) ee - (P~+1) yy, in cancellation-free form
};

TrialDerived derive_trial(const Scenario& sc, std::int64_t n, RandomStream& stream) {
  TrialGram g;
  do {
    accumulate_gram(sc, n, stream, g);
  } while (needs_resample(sc, g));

  const std::size_t k = g.k;
  const double nd = static_cast<double>(n);
  double s[kMaxSenders];     // codebook scale per sender
  double pdev[kMaxSenders];  // ||x_j||^2 - n P_j (exactly 0 on the shell)
  double p_tilde = 0.0;
  for (std::size_t j = 0; j < k; ++j) {
    const Codebook& cb = j == 0 ? sc.intended : sc.interferers[j - 1];
    if (cb.kind == CodebookKind::Shell) {
      s[j] = std::sqrt(nd * cb.power / g.gg[j]);
      pdev[j] = 0.0;
    } else {
      s[j] = std::sqrt(cb.power);
      pdev[j] = cb.power * (g.gg[j] - nd);
    }
    if (j > 0) p_tilde += cb.power;
  }

  const double p1 = sc.intended.power;
  double x1z = s[0] * g.gz[0];
  double x1w = 0.0;   // <x1, sum of interferers>
  double wz = 0.0;    // <sum of interferers, z>
  double pair = 0.0;  // sum_{1<=j<l} <x_j, x_l>
  double w_pdev = 0.0;
  for (std::size_t j = 1; j < k; ++j) {
    x1w += s[0] * s[j] * g.gram[0][j];
    wz += s[j] * g.gz[j];
    w_pdev += pdev[j];
    for (std::size_t l = j + 1; l < k; ++l) pair += s[j] * s[l] * g.gram[j][l];
  }

  const double ee = nd * p_tilde + w_pdev + 2.0 * pair + g.zz + 2.0 * wz;
  const double xx1 = nd * p1 + pdev[0];
  TrialDerived d;
  d.yy = xx1 + ee + 2.0 * (x1w + x1z);
  d.ee = ee;
  d.statistic = p1 * (g.zz - nd) + 2.0 * p1 * (pair + wz) -
                2.0 * (p_tilde + 1.0) * (x1z + x1w) + p1 * w_pdev -
                (p_tilde + 1.0) * pdev[0];
  return d;
}

double conditional_error_of_trial(const Scenario& sc, std::int64_t n,
                                  double log_m, RandomStream& stream) {
  const TrialDerived d = derive_trial(sc, n, stream);
  const double nd = static_cast<double>(n);
  exact_error::EmpiricalPowers ep{d.yy / nd, d.ee / nd, n, sc.intended.power};
  double psi;
  if (sc.intended.kind == CodebookKind::Shell)
    psi = ep.p_y_hat > 0.0 ? exact_error::psi_shell(ep) : 1.0;
  else
    psi = exact_error::psi_iid(ep);
  return exact_error::conditional_error_log_m(psi, log_m);
}

MCEstimate reduce_mean(std::vector<double>& values, std::uint64_t seed,
                       const char* method) {
  const MeanVar mv = mean_variance(values);
  MCEstimate out;
  out.estimate = mv.mean;
  out.std_error = values.size() > 1
                      ? std::sqrt(std::max(0.0, mv.variance) /
                                  static_cast<double>(values.size()))
                      : 0.0;
  out.trials = static_cast<std::int64_t>(values.size());
  out.seed = seed;
  out.method = method;
  return out;
}

}  // namespace

MCEstimate simulate_semi_analytic(const Scenario& scenario, std::int64_t n,
                                  double log_m, std::int64_t trials,
                                  std::uint64_t seed) {
  validate_scenario(scenario);
  check_common(n, trials);
  if (scenario.intended.kind == CodebookKind::Shell && n < 2)
    throw_domain("shell conditional error needs blocklength at least 2");
  if (!(log_m >= 0.0) || !std::isfinite(log_m))
    throw_domain("log message count must be nonnegative and finite");

  std::vector<double> values(static_cast<std::size_t>(trials));
  parallel_blocks(trials, [&](std::int64_t begin, std::int64_t end) {
    for (std::int64_t t = begin; t < end; ++t) {
      RandomStream stream(seed, static_cast<std::uint64_t>(t));
      values[static_cast<std::size_t>(t)] =
          conditional_error_of_trial(scenario, n, log_m, stream);
    }
  });
  return reduce_mean(values, seed, "semi_analytic");
}

MCEstimate simulate_brute_force(const Scenario& scenario, std::int64_t n,
                                std::int64_t m, std::int64_t trials,
                                std::uint64_t seed,
                                const BruteForceOptions& options) {
  validate_scenario(scenario);
  check_common(n, trials);
  if (m < 1) throw_domain("message count must be at least 1");
  if (m > kBruteForceMaxM)
    throw_guard(
        "brute force refuses M > 16384 codewords; use the semi-analytic "
        "estimator for large codebooks");

  const std::size_t nz = static_cast<std::size_t>(n);
  std::vector<double> values(static_cast<std::size_t>(trials));
  parallel_blocks(trials, [&](std::int64_t begin, std::int64_t end) {
    std::vector<double> x1(nz), y(nz), w(nz);
    for (std::int64_t t = begin; t < end; ++t) {
      RandomStream stream(seed, static_cast<std::uint64_t>(t));
      sample_codeword(std::span<double>(x1), scenario.intended, stream);
      std::copy(x1.begin(), x1.end(), y.begin());
      for (const Codebook& cb : scenario.interferers) {
        sample_codeword(std::span<double>(w), cb, stream);
        for (std::size_t i = 0; i < nz; ++i) y[i] += w[i];
      }
      if (!options.zero_noise)
        for (std::size_t i = 0; i < nz; ++i)
          y[i] += scenario.noise.sample_one(stream);

      double yy = 0.0, d1 = 0.0;
      for (std::size_t i = 0; i < nz; ++i) {
        yy += y[i] * y[i];
        const double diff = y[i] - x1[i];
        d1 += diff * diff;
      }

      bool error = false;
      const bool shell = scenario.intended.kind == CodebookKind::Shell;
      const double p1 = scenario.intended.power;
      for (std::int64_t cw = 1; cw < m && !error; ++cw) {
        double q, r;
        do {
          q = 0.0;
          r = 0.0;
          for (std::size_t i = 0; i < nz; ++i) {
            const double gi = stream.next_normal();
            q += gi * gi;
            r += gi * y[i];
          }
        } while (shell && q == 0.0);
        const double scale =
            shell ? std::sqrt(static_cast<double>(n) * p1 / q) : std::sqrt(p1);
        const double dw = yy - 2.0 * scale * r + scale * scale * q;
        if (dw < d1) error = true;
      }
      values[static_cast<std::size_t>(t)] = error ? 1.0 : 0.0;
    }
  });

  const double errors = pairwise_sum(values);
  const double p_hat = errors / static_cast<double>(trials);
  MCEstimate out;
  out.estimate = p_hat;
  out.std_error = std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(trials));
  out.trials = trials;
  out.seed = seed;
  out.method = "brute_force";
  return out;
}

MCEstimate statistic_variance(const Scenario& scenario, std::int64_t n,
                              std::int64_t trials, std::uint64_t seed) {
  validate_scenario(scenario);
  check_common(n, trials);
  if (scenario.intended.kind != CodebookKind::Shell)
    throw_domain("the decoding statistic requires a shell intended codebook");
  if (trials < 2) throw_domain("variance estimation needs at least 2 trials");

  std::vector<double> values(static_cast<std::size_t>(trials));
  parallel_blocks(trials, [&](std::int64_t begin, std::int64_t end) {
    for (std::int64_t t = begin; t < end; ++t) {
      RandomStream stream(seed, static_cast<std::uint64_t>(t));
      values[static_cast<std::size_t>(t)] = derive_trial(scenario, n, stream).statistic;
    }
  });

  const MeanVar mv = mean_variance(values);
  const double nd = static_cast<double>(n);
  MCEstimate out;
  out.estimate = mv.variance / nd;
  out.std_error = std::sqrt(std::max(0.0, mv.m4 - mv.variance * mv.variance) /
                            static_cast<double>(trials)) /
                  nd;
  out.trials = trials;
  out.seed = seed;
  out.method = "statistic";
  return out;
}

std::function<double(std::int64_t, RandomStream&)> statistic_sampler(
    const Scenario& scenario) {
  validate_scenario(scenario);
  if (scenario.intended.kind != CodebookKind::Shell)
    throw_domain("the decoding statistic requires a shell intended codebook");
  return [scenario](std::int64_t n, RandomStream& stream) {
    if (n < 1) throw_domain("blocklength must be at least 1");
    return derive_trial(scenario, n, stream).statistic;
  };
}

TypicalSetDiagnostic typical_set_diagnostic(double power, const NoiseModel& noise,
                                            std::int64_t n, double eta,
                                            std::int64_t trials,
                                            std::uint64_t seed) {
  if (!(power > 0.0) || !std::isfinite(power))
    throw_domain("power must be positive and finite");
  check_common(n, trials);
  if (!(eta > 0.0) || !(eta < 2.0 * power))
    throw_domain("eta must lie in (0, 2P)");

  const double xi = noise.moments().xi;
  const double nd = static_cast<double>(n);
  const double logn_over_n = std::log(nd) / nd;
  const double window_y = std::sqrt((xi - 1.0 + 4.0 * power) * logn_over_n);
  const double window_z = std::sqrt((xi - 1.0) * logn_over_n);

  const Scenario sc{Codebook{CodebookKind::Shell, power}, {}, noise};
  std::vector<double> out_y(static_cast<std::size_t>(trials));
  std::vector<double> out_z(static_cast<std::size_t>(trials));
  std::vector<double> out_q(static_cast<std::size_t>(trials));
  std::vector<double> out_any(static_cast<std::size_t>(trials));
  parallel_blocks(trials, [&](std::int64_t begin, std::int64_t end) {
    for (std::int64_t t = begin; t < end; ++t) {
      RandomStream stream(seed, static_cast<std::uint64_t>(t));
      const TrialDerived d = derive_trial(sc, n, stream);
      const double p_y = d.yy / nd;
      const double p_z = d.ee / nd;
      const bool viol_y = std::abs(p_y - (power + 1.0)) > window_y;
      const bool viol_z = std::abs(p_z - 1.0) > window_z;
      const bool viol_q = !(p_y + power - p_z > eta);
      const std::size_t idx = static_cast<std::size_t>(t);
      out_y[idx] = viol_y ? 1.0 : 0.0;
      out_z[idx] = viol_z ? 1.0 : 0.0;
      out_q[idx] = viol_q ? 1.0 : 0.0;
      out_any[idx] = (viol_y || viol_z || viol_q) ? 1.0 : 0.0;
    }
  });

  const double td = static_cast<double>(trials);
  TypicalSetDiagnostic diag;
  diag.freq_y = pairwise_sum(out_y) / td;
  diag.freq_z = pairwise_sum(out_z) / td;
  diag.freq_q = pairwise_sum(out_q) / td;
  diag.freq_total = pairwise_sum(out_any) / td;
  diag.q_envelope = std::exp(-nd * (2.0 * power - eta) * (2.0 * power - eta) /
                             (8.0 * power)) +
                    1.0 / std::sqrt(nd);
  diag.n = n;
  diag.trials = trials;
  diag.seed = seed;
  return diag;
}

}  // namespace nndisp::montecarlo
