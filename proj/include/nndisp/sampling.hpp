#ifndef NNDISP_SAMPLING_HPP
#define NNDISP_SAMPLING_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "nndisp/random.hpp"

namespace nndisp {

enum class CodebookKind { Shell, IidGaussian };

struct Codebook {
  CodebookKind kind;
  double power;
};

// Uniform draw from the sphere ||x||^2 = n*P (exact up to rounding): a
// standard-normal vector rescaled to the shell.  A zero-norm draw (probability
// zero) is resampled.
void sample_shell(std::span<double> out, double power, RandomStream& stream);

// I.i.d. zero-mean Gaussian entries of variance P.
void sample_iid(std::span<double> out, double power, RandomStream& stream);

void sample_codeword(std::span<double> out, const Codebook& codebook,
                     RandomStream& stream);

std::vector<double> sample_shell(std::int64_t n, double power, RandomStream& stream);
std::vector<double> sample_iid(std::int64_t n, double power, RandomStream& stream);

}  // namespace nndisp

#endif
