#ifndef S3A_DIRICHLET_HPP
#define S3A_DIRICHLET_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <set>
#include <string>

#include "abelian_enum.hpp"
#include "arith.hpp"
#include "core.hpp"

namespace s3a {

inline long double log_big(const BigInt& n) {
  if (n <= 0) throw std::domain_error("log of nonpositive");
  unsigned bits = msb(n);
  if (bits < 60) return std::log(static_cast<long double>(n.convert_to<std::uint64_t>()));
  unsigned shift = bits - 60;
  BigInt top = n >> shift;
  return std::log(static_cast<long double>(top.convert_to<std::uint64_t>())) + shift * std::log(2.0L);
}

struct TruncatedValue {
  long double value = 0;
  long double tail_bound = 0;
  long double epsilon = 0;   // count(t) <= K t^(1/a + epsilon) assumed past the data
  long double constant = 0;  // K: twice the largest ratio seen on the enumerated range
  std::string certificate;
};

// sum_{n <= Y} b_n n^-s with an Abel-summation tail certificate.
inline TruncatedValue eval_truncated(const DirichletCoeffs& g, const Rational& s, const BigInt& Y) {
  if (s <= g.abscissa)
    throw divergence_error("s = " + to_string(s) + " is not right of the pole at " + to_string(g.abscissa));
  if (Y > g.bound && !g.finite) throw bound_error("Y exceeds the coefficient bound");
  TruncatedValue r;
  const long double sl = to_double(s), al = to_double(g.abscissa);
  r.epsilon = std::min(0.05L, (sl - al) / 2);
  const long double growth = al + r.epsilon;
  // smallest terms first
  std::vector<long double> terms;
  long double count = 0, kmax = 0;
  for (const auto& [n, b] : g.terms) {
    long double ln = log_big(n), bl = b.convert_to<long double>();
    count += bl;
    kmax = std::max(kmax, count / std::exp(growth * ln));
    if (n <= Y) terms.push_back(bl * std::exp(-sl * ln));
  }
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) r.value += *it;
  r.constant = 2 * kmax;
  bool nothing_left = g.finite && (g.terms.empty() || g.terms.back().first <= Y);
  if (nothing_left) {
    r.tail_bound = 0;
    r.certificate = "finite series, exact";
  } else {
    r.tail_bound = r.constant * sl / (sl - growth) * std::exp((growth - sl) * log_big(Y));
    r.certificate = "assumes count(t) <= " + std::to_string(static_cast<double>(r.constant)) + " t^(" +
                    std::to_string(static_cast<double>(growth)) + ") for t > Y (measured constant doubled)";
  }
  return r;
}

// Bound on sum_{n > P, n = 1 mod l} n^{-sigma}, sigma > 1.
inline long double progression_tail(long double P, long double sigma, int ell) {
  return std::pow(P, -sigma) + std::pow(P, 1 - sigma) / (ell * (sigma - 1));
}

// Local condition on the abelian side.
struct AbelianCondition {
  std::set<std::uint64_t> forced;     // L ramified here
  std::set<std::uint64_t> forbidden;  // L unramified here
};

struct EulerValue {
  long double value = 0;
  long double tail_bound = 0;
};

inline EulerValue g_lambda_value(int ell, const Rational& s, const AbelianCondition& cond,
                                 std::uint64_t prime_bound = 1000000, WildWeight w = WildWeight::displayed) {
  check_ell(ell);
  const long double sigma = to_double(s) * (ell - 1);
  if (s <= Rational(1, ell - 1)) throw divergence_error("g(s) diverges for s <= 1/(l-1)");
  for (std::uint64_t p : cond.forced)
    if (cond.forbidden.count(p)) throw usage_error("prime both forced and forbidden");
  EulerValue r;
  long double logv = 0;
  const long double L = static_cast<long double>(ell);
  const long double wl = w == WildWeight::displayed ? L + 1 : L - 1;
  // factor at l
  {
    long double ram = wl * std::pow(L, -2 * (L - 1) * to_double(s));
    auto e = static_cast<std::uint64_t>(ell);
    if (cond.forced.count(e)) logv += std::log(ram);
    else if (!cond.forbidden.count(e)) logv += std::log1p(ram);
  }
  for (std::uint64_t p : cond.forced)
    if (p != static_cast<std::uint64_t>(ell) && p % ell != 1) return r;  // cannot ramify in a C_l field
  std::uint64_t P = std::max<std::uint64_t>(prime_bound, cond.forced.empty() ? 0 : *cond.forced.rbegin());
  for (std::uint64_t p : primes_up_to(P)) {
    if (p % ell != 1) continue;
    long double ram = (L - 1) * std::pow(static_cast<long double>(p), -sigma);
    if (cond.forced.count(p)) logv += std::log(ram);
    else if (!cond.forbidden.count(p)) logv += std::log1p(ram);
  }
  r.value = std::exp(logv);
  r.tail_bound = r.value * std::expm1((L - 1) * progression_tail(static_cast<long double>(P), sigma, ell));
  return r;
}

// Largest g_Lambda / (g * prod p^{-ind(b) s}) over single forced primes: the measured constant.
inline long double lemma43_constant(int ell, const Rational& s, const std::vector<std::uint64_t>& primes) {
  const long double sigma = to_double(s) * (ell - 1);
  long double best = 0;
  for (std::uint64_t p : primes) {
    if (p % ell != 1) continue;
    long double x = (ell - 1) * std::pow(static_cast<long double>(p), -sigma);
    best = std::max(best, (x / (1 + x)) / std::pow(static_cast<long double>(p), -sigma));
  }
  return best;
}

}  // namespace s3a

#endif
