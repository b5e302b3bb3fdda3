#ifndef S3A_DENSITIES_HPP
#define S3A_DENSITIES_HPP

#include <cmath>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <string>

#include "arith.hpp"
#include "core.hpp"
#include "special_functions.hpp"

namespace s3a {

enum class RamType { unramified, partial, total };
enum class Term { main, secondary };

inline const char* to_string(RamType r) {
  switch (r) {
    case RamType::partial: return "partial";
    case RamType::total: return "total";
    default: return "unramified";
  }
}

// Exponents of the error dependency C_q = q^a, C_{r^2} = r^b.
struct ErrorDependency {
  Rational a{4, 5};
  Rational b{4, 5};
};

// 1 + 1/p + 1/p^2
inline Rational C_p(std::uint64_t p) {
  BigInt P = p;
  return Rational(P * P + P + 1, P * P);
}

inline long double K_p(std::uint64_t p) {
  long double x = static_cast<long double>(p);
  return (1 - std::pow(x, -5.0L / 3)) * (1 + 1 / x) / (1 - std::pow(x, -1.0L / 3));
}

inline Rational main_density(std::uint64_t p, RamType r) {
  Rational inv = 1 / C_p(p);
  switch (r) {
    case RamType::partial: return inv / Rational(p);
    case RamType::total: return inv / Rational(BigInt(p) * p);
    default: return inv;
  }
}

inline long double secondary_density(std::uint64_t p, RamType r) {
  long double x = static_cast<long double>(p);
  long double u = std::pow(x, -1.0L / 3);
  long double k = K_p(p);
  switch (r) {
    case RamType::partial: return (1 + u) * (1 + u) / (k * x);
    case RamType::total: return (1 + u) / (k * x * x);
    default: return (1 + u) * (1 + u * u) / k;
  }
}

inline long double local_density(std::uint64_t p, RamType r, Term t) {
  if (t == Term::main) return main_density(p, r).convert_to<long double>();
  return secondary_density(p, r);
}

struct LocalDensity {
  std::uint64_t p = 0;
  Rational Ap, Ap2;
  long double Bp = 0, Bp2 = 0;
  long double Cp_err = 0;  // p^a

  static LocalDensity at(std::uint64_t p, const ErrorDependency& dep = {}) {
    LocalDensity d;
    d.p = p;
    d.Ap = main_density(p, RamType::partial);
    d.Ap2 = main_density(p, RamType::total);
    d.Bp = secondary_density(p, RamType::partial);
    d.Bp2 = secondary_density(p, RamType::total);
    d.Cp_err = std::pow(static_cast<long double>(p), dep.a.convert_to<long double>());
    return d;
  }
};

struct GlobalConstants {
  Real50 A, B;
  Real50 zeta3, zeta5_3, zeta1_3, gamma2_3;
  int digits = 0;

  long double A_ld() const { return A.convert_to<long double>(); }
  long double B_ld() const { return B.convert_to<long double>(); }
  std::string A_str() const { return A.str(digits); }
  std::string B_str() const { return B.str(digits); }
};

namespace detail {

inline const GlobalConstants& full_constants() {
  static const GlobalConstants g = [] {
    GlobalConstants c;
    Real100 z3 = zeta_em<Real100>(Real100(3));
    Real100 z53 = zeta_em<Real100>(Real100(5) / 3);
    Real100 z13 = zeta_via_eta<Real100>(Real100(1) / 3, 60);
    Real100 g23 = gamma_spouge<Real100>(Real100(2) / 3, 60);
    Real100 A = 1 / (3 * z3);
    Real100 B = (1 + sqrt(Real100(3))) * 4 * z13 / (5 * g23 * g23 * g23 * z53);
    c.A = Real50(A);
    c.B = Real50(B);
    c.zeta3 = Real50(z3);
    c.zeta5_3 = Real50(z53);
    c.zeta1_3 = Real50(z13);
    c.gamma2_3 = Real50(g23);
    c.digits = 30;
    return c;
  }();
  return g;
}

}  // namespace detail

inline GlobalConstants global_constants(int digits) {
  if (digits < 1 || digits > 30)
    throw precision_error("constants are available to between 1 and 30 digits, asked for " +
                          std::to_string(digits));
  GlobalConstants c = detail::full_constants();
  c.digits = digits;
  return c;
}

inline long double const_A() { return detail::full_constants().A_ld(); }
inline long double const_B() { return detail::full_constants().B_ld(); }

struct Asymptotic {
  long double main = 0;
  long double secondary = 0;
  long double total() const { return main + secondary; }
};

inline void check_qr(std::uint64_t q, std::uint64_t r) {
  if (q == 0 || r == 0 || std::gcd(q, r) != 1 || !is_squarefree(q) || !is_squarefree(r))
    throw hypothesis_error("q and r must be coprime squarefree positive integers");
  if ((q * r) % 2 == 0 || (q * r) % 3 == 0) throw hypothesis_error("q and r must be prime to 6");
}

inline Asymptotic predicted_Nqr(long double X, std::uint64_t q, std::uint64_t r) {
  check_qr(q, r);
  Asymptotic a;
  if (X <= 0) return a;
  long double mq = 1, sq = 1;
  for (auto [p, e] : factor_u64(q)) {
    (void)e;
    mq *= local_density(p, RamType::partial, Term::main);
    sq *= local_density(p, RamType::partial, Term::secondary);
  }
  for (auto [p, e] : factor_u64(r)) {
    (void)e;
    mq *= local_density(p, RamType::total, Term::main);
    sq *= local_density(p, RamType::total, Term::secondary);
  }
  a.main = const_A() * mq * X;
  a.secondary = const_B() * sq * std::pow(X, 5.0L / 6);
  return a;
}

}  // namespace s3a

#endif
