#include "nndisp/sampling.hpp"

#include <cmath>

#include "nndisp/error.hpp"

namespace nndisp {

namespace {

void check_args(std::size_t n, double power) {
  if (n < 1) throw_domain("codeword length must be at least 1");
  if (!(power > 0.0) || !std::isfinite(power))
    throw_domain("codebook power must be positive and finite");
}

}  // namespace

void sample_shell(std::span<double> out, double power, RandomStream& stream) {
  check_args(out.size(), power);
  const double n = static_cast<double>(out.size());
  double sumsq = 0.0;
  do {
    sumsq = 0.0;
    for (double& x : out) {
      x = stream.next_normal();
      sumsq += x * x;
    }
  } while (sumsq == 0.0);
  const double scale = std::sqrt(n * power / sumsq);
  for (double& x : out) x *= scale;
}

void sample_iid(std::span<double> out, double power, RandomStream& stream) {
  check_args(out.size(), power);
  const double scale = std::sqrt(power);
  for (double& x : out) x = scale * stream.next_normal();
}

void sample_codeword(std::span<double> out, const Codebook& codebook,
                     RandomStream& stream) {
  if (codebook.kind == CodebookKind::Shell)
    sample_shell(out, codebook.power, stream);
  else
    sample_iid(out, codebook.power, stream);
}

std::vector<double> sample_shell(std::int64_t n, double power, RandomStream& stream) {
  if (n < 1) throw_domain("codeword length must be at least 1");
  std::vector<double> out(static_cast<std::size_t>(n));
  sample_shell(std::span<double>(out), power, stream);
  return out;
}

std::vector<double> sample_iid(std::int64_t n, double power, RandomStream& stream) {
  if (n < 1) throw_domain("codeword length must be at least 1");
  std::vector<double> out(static_cast<std::size_t>(n));
  sample_iid(std::span<double>(out), power, stream);
  return out;
}

}  // namespace nndisp
