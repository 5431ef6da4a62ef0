#pragma once

#include <algorithm>
#include <cassert>
#include <vector>

namespace supercong {

// Deterministic Eratosthenes sieve; primes in [lo, hi].
inline std::vector<long long> primes_in_range(long long lo, long long hi) {
  std::vector<long long> out;
  if (hi < 2) return out;
  assert(hi <= 50'000'000 && "sieve bound");
  std::vector<bool> composite(static_cast<std::size_t>(hi) + 1, false);
  for (long long i = 2; i * i <= hi; ++i)
    if (!composite[static_cast<std::size_t>(i)])
      for (long long j = i * i; j <= hi; j += i)
        composite[static_cast<std::size_t>(j)] = true;
  for (long long i = std::max<long long>(lo, 2); i <= hi; ++i)
    if (!composite[static_cast<std::size_t>(i)]) out.push_back(i);
  return out;
}

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace supercong
