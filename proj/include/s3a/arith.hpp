#ifndef S3A_ARITH_HPP
#define S3A_ARITH_HPP

#include <cmath>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "core.hpp"

namespace s3a {

using Factorization = std::vector<std::pair<std::uint64_t, int>>;

// Smallest-prime-factor table.
class PrimeTable {
 public:
  explicit PrimeTable(std::uint64_t limit) : limit_(limit), spf_(limit + 1, 0) {
    for (std::uint64_t i = 2; i <= limit_; ++i) {
      if (spf_[i] == 0) {
        primes_.push_back(i);
        for (std::uint64_t j = i; j <= limit_; j += i)
          if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
      }
    }
  }

  std::uint64_t limit() const { return limit_; }
  const std::vector<std::uint64_t>& primes() const { return primes_; }
  bool is_prime(std::uint64_t n) const { return n >= 2 && n <= limit_ && spf_[n] == n; }
  std::uint64_t spf(std::uint64_t n) const { return spf_[n]; }

  Factorization factor(std::uint64_t n) const {
    Factorization f;
    if (n > limit_) return factor_trial(n);
    while (n > 1) {
      std::uint64_t p = spf_[n];
      int e = 0;
      while (n % p == 0) { n /= p; ++e; }
      f.emplace_back(p, e);
    }
    return f;
  }

  Factorization factor_trial(std::uint64_t n) const {
    Factorization f;
    for (std::uint64_t p : primes_) {
      if (p * p > n) break;
      if (n % p == 0) {
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        f.emplace_back(p, e);
      }
    }
    if (n > 1) {
      // only sound when limit_^2 >= original n
      for (std::uint64_t p = primes_.empty() ? 2 : primes_.back() + 1; p * p <= n; ++p) {
        if (n % p == 0) {
          int e = 0;
          while (n % p == 0) { n /= p; ++e; }
          f.emplace_back(p, e);
        }
      }
      if (n > 1) f.emplace_back(n, 1);
    }
    return f;
  }

 private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint64_t> primes_;
};

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n < 2) return out;
  std::vector<bool> comp(n + 1, false);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (comp[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= n; j += i) comp[j] = true;
  }
  return out;
}

inline Factorization factor_u64(std::uint64_t n) {
  Factorization f;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) { n /= p; ++e; }
      f.emplace_back(p, e);
    }
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2))
    if (n % p == 0) return false;
  return true;
}

inline bool is_squarefree(std::uint64_t n) {
  if (n == 0) return false;
  for (auto [p, e] : factor_u64(n))
    if (e > 1) return false;
  return true;
}

inline int valuation(std::uint64_t n, std::uint64_t p) {
  int v = 0;
  while (n != 0 && n % p == 0) { n /= p; ++v; }
  return v;
}

inline int valuation(BigInt n, std::uint64_t p) {
  int v = 0;
  if (n == 0) return 0;
  while (n % p == 0) { n /= p; ++v; }
  return v;
}

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

// Exact perfect-square test.
inline bool is_square(std::int64_t n) {
  if (n < 0) return false;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n;
}

}  // namespace s3a

#endif
