#ifndef S3A_SPECIAL_FUNCTIONS_HPP
#define S3A_SPECIAL_FUNCTIONS_HPP

#include <cmath>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "core.hpp"

namespace s3a {

using Real50 = boost::multiprecision::cpp_bin_float_50;
using Real100 = boost::multiprecision::cpp_bin_float_100;

// B_0 .. B_n as exact rationals
inline std::vector<Rational> bernoulli_numbers(int n) {
  std::vector<Rational> B(n + 1);
  B[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rational s = 0;
    BigInt binom = 1;  // C(m+1, k)
    for (int k = 0; k < m; ++k) {
      s += Rational(binom) * B[k];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    B[m] = -s / Rational(m + 1);
  }
  return B;
}

template <class Real>
Real rational_to(const Rational& r) {
  return Real(numerator(r)) / Real(denominator(r));
}

namespace detail {

template <class Real>
const std::vector<Real>& em_coefficients() {
  // B_{2k} / (2k)!
  static const std::vector<Real> c = [] {
    const int K = 40;
    auto B = bernoulli_numbers(2 * K);
    std::vector<Real> out(K + 1, Real(0));
    BigInt fact = 1;
    for (int j = 1; j <= 2 * K; ++j) {
      fact *= j;
      if (j % 2 == 0) out[j / 2] = rational_to<Real>(B[j] / Rational(fact));
    }
    return out;
  }();
  return c;
}

// Euler-Maclaurin tail: sum_{n >= N} n^{-s}, valid for s != 1, N large enough.
template <class Real>
Real em_tail(const Real& s, const Real& N, int K) {
  using std::pow;
  const auto& c = em_coefficients<Real>();
  Real sum = pow(N, 1 - s) / (s - 1) + pow(N, -s) / 2;
  Real rising = s;  // s(s+1)...(s+2k-2)
  Real npow = pow(N, -s - 1);
  Real n2 = 1 / (N * N);
  for (int k = 1; k <= K; ++k) {
    Real term = c[k] * rising * npow;
    sum += term;
    rising *= (s + 2 * k - 1) * (s + 2 * k);
    npow *= n2;
  }
  return sum;
}

}  // namespace detail

// zeta(s), s real != 1, by Euler-Maclaurin.
template <class Real>
Real zeta_em(const Real& s, int N = 40, int K = 36) {
  using std::pow;
  if (s == 1) throw divergence_error("zeta pole at s = 1");
  Real head = 0;
  for (int n = N - 1; n >= 1; --n) head += pow(Real(n), -s);
  return head + detail::em_tail<Real>(s, Real(N), K);
}

// sum_{n >= a} n^{-s} for s > 1, a >= 1
template <class Real>
Real hurwitz_tail(const Real& s, double a) {
  using std::pow;
  if (!(s > 1)) throw divergence_error("tail sum needs s > 1");
  Real head = 0;
  double n = a;
  const double start = 24;
  while (n < start) {
    head += pow(Real(n), -s);
    n += 1;
  }
  return head + detail::em_tail<Real>(s, Real(n), 12);
}

// Dirichlet eta by Borwein's accelerated alternating series; error about 3/(3+sqrt 8)^n for real s.
template <class Real>
Real eta_borwein(const Real& s, int n) {
  using std::pow;
  std::vector<Real> d(n + 1);
  Real term = Real(1) / n;  // (n+i-1)! 4^i / ((n-i)! (2i)!) at i = 0
  Real acc = term;
  d[0] = n * acc;
  for (int i = 1; i <= n; ++i) {
    term *= Real(n + i - 1) * 4 * (n - i + 1) / (Real(2 * i - 1) * (2 * i));
    acc += term;
    d[i] = n * acc;
  }
  Real sum = 0;
  for (int k = 0; k < n; ++k) {
    Real t = (d[k] - d[n]) / pow(Real(k + 1), s);
    sum += (k % 2 == 0) ? t : Real(-t);
  }
  return -sum / d[n];
}

template <class Real>
Real zeta_via_eta(const Real& s, int n) {
  using std::pow;
  return eta_borwein<Real>(s, n) / (1 - pow(Real(2), 1 - s));
}

// Spouge's approximation (a Lanczos-type sum), reflection below 1/2.
template <class Real>
Real gamma_spouge(const Real& x, int a) {
  using std::exp;
  using std::pow;
  using std::sin;
  using std::sqrt;
  const Real pi = boost::math::constants::pi<Real>();
  if (x < Real(0.5)) return pi / (sin(pi * x) * gamma_spouge<Real>(1 - x, a));
  Real z = x - 1;
  Real sum = sqrt(2 * pi);
  Real fact = 1;  // (k-1)!
  for (int k = 1; k < a; ++k) {
    if (k > 1) fact *= (k - 1);
    Real ck = pow(Real(a - k), Real(k) - Real(0.5)) * exp(Real(a - k)) / fact;
    if (k % 2 == 0) ck = -ck;
    sum += ck / (z + k);
  }
  return pow(z + a, z + Real(0.5)) * exp(-(z + a)) * sum;
}

}  // namespace s3a

#endif
