#include "nndisp/delta_method.hpp"

#include <algorithm>
#include <cmath>

#include "nndisp/analytics.hpp"
#include "nndisp/error.hpp"
#include "nndisp/parallel.hpp"

namespace nndisp::delta_method {

double delta_variance(const DeltaSpec& spec) {
  const std::size_t d = spec.dim();
  if (d == 0) throw_domain("delta spec must have at least one component");
  if (spec.covariance.size() != d * d)
    throw_domain("delta spec covariance dimension does not match the jacobian");
  double acc = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < d; ++j)
      row += spec.covariance[i * d + j] * spec.jacobian[j];
    acc += spec.jacobian[i] * row;
  }
  return acc;
}

DeltaSpec p2p_spec(double power, double xi) {
  if (!(power > 0.0) || !std::isfinite(power))
    throw_domain("power must be positive and finite");
  if (!(xi >= 1.0)) throw_domain("kurtosis must satisfy xi >= 1");
  DeltaSpec spec;
  spec.jacobian = {power, 2.0, 0.0};
  spec.labels = {"noise_power_dev", "input_noise_cross", "input_power_dev"};
  spec.covariance.assign(9, 0.0);
  spec.covariance[0] = xi - 1.0;
  spec.covariance[4] = power;
  spec.covariance[8] = 2.0;
  return spec;
}

DeltaSpec interference_spec(double p1, std::span<const double> interferer_powers,
                            double xi) {
  if (!(p1 > 0.0) || !std::isfinite(p1))
    throw_domain("intended power must be positive and finite");
  if (!(xi >= 1.0)) throw_domain("kurtosis must satisfy xi >= 1");
  if (interferer_powers.empty())
    throw_domain("no interferers given: use the point-to-point spec");
  for (double p : interferer_powers)
    if (!(p > 0.0) || !std::isfinite(p))
      throw_domain("interferer powers must be positive and finite");

  const std::size_t k = interferer_powers.size();  // number of interferers
  double p_tilde = 0.0;
  for (double p : interferer_powers) p_tilde += p;
  const double t1 = p_tilde + 1.0;

  DeltaSpec spec;
  const std::size_t dim = 3 + 3 * k + k * (k - 1) / 2;
  spec.jacobian.reserve(dim);
  spec.labels.reserve(dim);
  std::vector<double> diag;
  diag.reserve(dim);

  // Per-symbol families shared with the point-to-point statistic.
  spec.jacobian.push_back(p1);
  diag.push_back(xi - 1.0);
  spec.labels.push_back("noise_power_dev");

  spec.jacobian.push_back(2.0 * t1);
  diag.push_back(p1);
  spec.labels.push_back("intended_noise_cross");

  spec.jacobian.push_back(0.0);
  diag.push_back(2.0);
  spec.labels.push_back("intended_power_dev");

  // Per-interferer families (indices start at user 2).
  for (std::size_t i = 0; i < k; ++i) {
    const std::string id = std::to_string(i + 2);

    spec.jacobian.push_back(2.0 * t1);
    diag.push_back(p1 * interferer_powers[i]);
    spec.labels.push_back("intended_interferer_cross_" + id);

    spec.jacobian.push_back(-2.0 * p1);
    diag.push_back(interferer_powers[i]);
    spec.labels.push_back("interferer_noise_cross_" + id);

    spec.jacobian.push_back(0.0);
    diag.push_back(2.0);
    spec.labels.push_back("interferer_power_dev_" + id);
  }

  // Pairwise interferer cross terms.
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      spec.jacobian.push_back(-2.0 * p1);
      diag.push_back(interferer_powers[i] * interferer_powers[j]);
      spec.labels.push_back("interferer_cross_" + std::to_string(i + 2) + "_" +
                            std::to_string(j + 2));
    }
  }

  const std::size_t d = spec.jacobian.size();
  spec.covariance.assign(d * d, 0.0);
  for (std::size_t i = 0; i < d; ++i) spec.covariance[i * d + i] = diag[i];
  return spec;
}

double ks_distance_normal(std::span<double> sample) {
  if (sample.empty()) throw_domain("KS distance needs a nonempty sample");
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double dist = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double cdf =
        static_cast<double>(analytics::gaussian_q(-sample[i]));  // Phi(x)
    const double hi = (static_cast<double>(i) + 1.0) / n - cdf;
    const double lo = cdf - static_cast<double>(i) / n;
    dist = std::max(dist, std::max(hi, lo));
  }
  return dist;
}

CltResult clt_check(const std::function<double(std::int64_t, RandomStream&)>& sampler,
                    double sigma2, std::span<const std::int64_t> n_values,
                    std::int64_t trials, std::uint64_t seed) {
  if (!(sigma2 > 0.0) || !std::isfinite(sigma2))
    throw_domain("per-symbol variance must be positive and finite");
  if (n_values.empty()) throw_domain("CLT check needs at least one blocklength");
  if (trials < 2) throw_domain("CLT check needs at least 2 trials");
  for (std::int64_t n : n_values)
    if (n < 1) throw_domain("blocklengths must be at least 1");

  CltResult out;
  out.points.reserve(n_values.size());
  std::vector<double> values(static_cast<std::size_t>(trials));
  for (std::size_t idx = 0; idx < n_values.size(); ++idx) {
    const std::int64_t n = n_values[idx];
    const double scale = 1.0 / std::sqrt(static_cast<double>(n) * sigma2);
    const std::uint64_t stream_base = static_cast<std::uint64_t>(idx) *
                                      static_cast<std::uint64_t>(trials);
    parallel_blocks(trials, [&](std::int64_t begin, std::int64_t end) {
      for (std::int64_t t = begin; t < end; ++t) {
        RandomStream stream(seed, stream_base + static_cast<std::uint64_t>(t));
        values[static_cast<std::size_t>(t)] = sampler(n, stream) * scale;
      }
    });
    out.points.push_back({n, ks_distance_normal(values)});
  }

  // Least-squares slope of log(distance) against log(n).
  if (out.points.size() >= 2) {
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const double m = static_cast<double>(out.points.size());
    for (const KsPoint& p : out.points) {
      const double x = std::log(static_cast<double>(p.n));
      const double y = std::log(p.distance);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    out.decay_slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  } else {
    out.decay_slope = 0.0;
  }
  return out;
}

}  // namespace nndisp::delta_method
