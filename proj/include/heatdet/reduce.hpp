#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace heatdet {

using cplx = std::complex<double>;

/// Pairwise (binary-counter) accumulator. Summation order depends only on the
/// sequence of add() calls, never on thread count, so results are reproducible
/// bit for bit while keeping the O(log n) error growth of tree summation.
template <typename T>
class PairwiseSum {
public:
  void add(T x) {
    // Merge completed subtrees of equal size, like binary increment.
    std::size_t c = count_++;
    for (; c & 1u; c >>= 1) {
      x += stack_.back();
      stack_.pop_back();
    }
    stack_.push_back(x);
  }

  /// Fold the remaining partial sums, smallest subtree first.
  T total() const {
    T s{};
    for (auto it = stack_.rbegin(); it != stack_.rend(); ++it) s += *it;
    return s;
  }

  std::size_t count() const { return count_; }

private:
  std::vector<T> stack_;
  std::size_t count_ = 0;
};

/// Pairwise sum of a contiguous buffer in index order (recursive halving).
template <typename T>
T pairwise_total(const T* data, std::size_t n) {
  if (n == 0) return T{};
  if (n <= 8) {
    T s = data[0];
    for (std::size_t i = 1; i < n; ++i) s += data[i];
    return s;
  }
  const std::size_t h = n / 2;
  return pairwise_total(data, h) + pairwise_total(data + h, n - h);
}

template <typename T>
T pairwise_total(const std::vector<T>& v) {
  return pairwise_total(v.data(), v.size());
}

/// Number of worker threads used by parallel_for_index. 0 = hardware default.
void set_thread_count(unsigned n);
unsigned thread_count();

/// Runs body(i) for i in [0, n) on the worker pool. The partition is static and
/// results must be written to per-index slots by the caller; combined with
/// pairwise_total this yields thread-count-independent reductions.
void parallel_for_index(std::size_t n, const std::function<void(std::size_t)>& body);

/// Convenience: evaluates term(i) into a slot buffer in parallel, then reduces
/// the buffer serially in fixed pairwise order.
template <typename T, typename F>
T parallel_map_reduce(std::size_t n, F&& term) {
  std::vector<T> slots(n);
  parallel_for_index(n, [&](std::size_t i) { slots[i] = term(i); });
  return pairwise_total(slots);
}

} // namespace heatdet
