#include "nndisp/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace nndisp {

namespace {

constexpr std::int64_t kBlockSize = 1024;

std::size_t parse_env_workers() {
  const char* env = std::getenv("NNDISP_THREADS");
  if (env == nullptr) return 0;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1) return 0;
  return static_cast<std::size_t>(v);
}

}  // namespace

std::size_t worker_count() {
  const std::size_t from_env = parse_env_workers();
  if (from_env > 0) return from_env;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

void parallel_blocks(std::int64_t total,
                     const std::function<void(std::int64_t, std::int64_t)>& fn) {
  if (total <= 0) return;
  const std::int64_t nblocks = (total + kBlockSize - 1) / kBlockSize;
  std::size_t workers = worker_count();
  if (workers > static_cast<std::size_t>(nblocks))
    workers = static_cast<std::size_t>(nblocks);

  if (workers <= 1) {
    for (std::int64_t b = 0; b < nblocks; ++b) {
      const std::int64_t begin = b * kBlockSize;
      const std::int64_t end = std::min(total, begin + kBlockSize);
      fn(begin, end);
    }
    return;
  }

  std::atomic<std::int64_t> next{0};
  std::exception_ptr first_error = nullptr;
  std::mutex error_mutex;

  auto work = [&]() {
    while (true) {
      const std::int64_t b = next.fetch_add(1, std::memory_order_relaxed);
      if (b >= nblocks) return;
      const std::int64_t begin = b * kBlockSize;
      const std::int64_t end = std::min(total, begin + kBlockSize);
      try {
        fn(begin, end);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

double pairwise_sum(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n <= 32) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

MeanVar mean_variance(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n == 0) return {0.0, 0.0, 0.0};
  const double mean = pairwise_sum(values) / static_cast<double>(n);

  // Second pass for central moments, pairwise over a scratch buffer.
  std::vector<double> centered_sq(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double d = values[i] - mean;
    centered_sq[i] = d * d;
  }
  const double ss = pairwise_sum(centered_sq);
  for (std::size_t i = 0; i < n; ++i) centered_sq[i] *= centered_sq[i];
  const double s4 = pairwise_sum(centered_sq);

  MeanVar out;
  out.mean = mean;
  out.variance = n > 1 ? ss / static_cast<double>(n - 1) : 0.0;
  out.m4 = s4 / static_cast<double>(n);
  return out;
}

}  // namespace nndisp
