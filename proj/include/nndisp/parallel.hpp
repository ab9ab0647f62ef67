#ifndef NNDISP_PARALLEL_HPP
#define NNDISP_PARALLEL_HPP

#include <cstdint>
#include <functional>
#include <span>

namespace nndisp {

// Worker count: NNDISP_THREADS if set to a positive integer, otherwise the
// hardware concurrency (at least 1).
std::size_t worker_count();

// Runs fn(begin, end) over fixed-size chunks of [0, total).  Chunks are
// claimed dynamically but identified by index, so any writes keyed by trial
// index land in the same place regardless of scheduling or worker count.
void parallel_blocks(std::int64_t total,
                     const std::function<void(std::int64_t, std::int64_t)>& fn);

// Pairwise (tree) summation: deterministic for a given length, independent of
// how the values were produced, and more accurate than a running sum.
double pairwise_sum(std::span<const double> values);

struct MeanVar {
  double mean;
  double variance;  // unbiased (n-1 denominator); 0 when n < 2
  double m4;        // central fourth moment (biased, n denominator)
};

// Two-pass moments over a complete trial array; all reductions pairwise.
MeanVar mean_variance(std::span<const double> values);

}  // namespace nndisp

#endif
