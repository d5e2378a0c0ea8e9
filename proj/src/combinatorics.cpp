#include "dn/combinatorics.hpp"

namespace dn {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt factorial(std::uint64_t n) {
  BigInt r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt power(const BigInt& base, std::uint64_t exp) {
  BigInt r = 1;
  BigInt b = base;
  while (exp) {
    if (exp & 1) r *= b;
    exp >>= 1;
    if (exp) b *= b;
  }
  return r;
}

Rational power(const Rational& base, std::uint64_t exp) {
  return Rational(power(numerator(base), exp), power(denominator(base), exp));
}

std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k) {
  BigInt b = binomial(n, k);
  if (b > BigInt(UINT64_MAX)) {
    throw Error(ErrorKind::cap_exceeded, "binomial coefficient exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(b);
}

CombinationRanker::CombinationRanker(std::size_t n, std::size_t k)
    : n_(n), k_(k), count_(binomial_u64(n, k)), table_(n + 1, std::vector<std::uint64_t>(k + 1, 0)) {
  for (std::size_t a = 0; a <= n; ++a) {
    table_[a][0] = 1;
    for (std::size_t b = 1; b <= k && b <= a; ++b) {
      table_[a][b] = table_[a - 1][b - 1] + (b <= a - 1 ? table_[a - 1][b] : 0);
    }
  }
}

std::uint64_t CombinationRanker::rank(std::span<const std::uint32_t> subset) const {
  // Count subsets that precede `subset`: at position i every smaller choice c
  // for the i-th element leaves C(n-1-c, k-1-i) completions.
  std::uint64_t r = 0;
  std::uint32_t next = 0;
  for (std::size_t i = 0; i < k_; ++i) {
    for (std::uint32_t c = next; c < subset[i]; ++c) r += table_[n_ - 1 - c][k_ - 1 - i];
    next = subset[i] + 1;
  }
  return r;
}

}  // namespace dn
