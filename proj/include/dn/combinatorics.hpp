#pragma once

#include "dn/types.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace dn {

BigInt binomial(std::uint64_t n, std::uint64_t k);
BigInt factorial(std::uint64_t n);
BigInt power(const BigInt& base, std::uint64_t exp);
Rational power(const Rational& base, std::uint64_t exp);

/// Binomial in 64 bits; throws cap_exceeded on overflow.
std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k);

/// Exact sum of many 64-bit terms without per-term big-integer work.
class CountAccumulator {
 public:
  void add(std::uint64_t x) {
    if (__builtin_add_overflow(low_, x, &low_)) {
      high_ += BigInt(UINT64_MAX);
      high_ += 1;
    }
  }
  void add(const BigInt& x) { high_ += x; }
  BigInt value() const { return high_ + low_; }

 private:
  std::uint64_t low_ = 0;
  BigInt high_ = 0;
};

/// Calls f(span of k indices) for every k-subset of {0..n-1} in
/// lexicographic order. f returns false to stop early.
template <typename F>
void for_each_combination(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::uint32_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = static_cast<std::uint32_t>(i);
  while (true) {
    if (!f(std::span<const std::uint32_t>(idx))) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Position of a sorted k-subset of {0..n-1} in lexicographic order.
class CombinationRanker {
 public:
  CombinationRanker(std::size_t n, std::size_t k);
  std::uint64_t rank(std::span<const std::uint32_t> subset) const;
  std::uint64_t count() const { return count_; }

 private:
  std::size_t n_;
  std::size_t k_;
  std::uint64_t count_;
  // table_[a][b] = C(a, b) for a <= n, b <= k.
  std::vector<std::vector<std::uint64_t>> table_;
};

}  // namespace dn
