#ifndef S3A_EULER_CONSTANTS_HPP
#define S3A_EULER_CONSTANTS_HPP

#include <cmath>
#include <cstdint>
#include <thread>
#include <vector>

#include "abelian_enum.hpp"
#include "arith.hpp"
#include "core.hpp"
#include "densities.hpp"
#include "dirichlet.hpp"

namespace s3a {

// Sign of the q^Delta, r^2Delta weights inside the Euler bracket.
// as_displayed: p^-Delta. from_sum: p^+Delta, which is what L_rho^(1/m) produces.
enum class LocalScaling { as_displayed, from_sum };

struct EulerOptions {
  LocalScaling scaling = LocalScaling::as_displayed;
  WildWeight weight = WildWeight::displayed;
  unsigned workers = 1;
  std::size_t block = 4096;  // primes per block; fixes the reduction order
};

struct RawConstant {
  long double value = 0;
  long double truncation_bound = 0;
  long double wild = 0;      // c_l or d_l
  long double g_ell = 0;     // l-factor of g
  long double log_product = 0;
};

struct WildSummand {
  RamType sigma;
  bool lambda_ramified;
  int e;                 // exponent of l in L_rho
  long double disc_ratio;
  long double g_ratio;
  long double density;
  long double value() const { return disc_ratio * g_ratio * density; }
};

inline void check_constants_ell(int ell) {
  check_ell(ell);
  if (ell <= 5) throw hypothesis_error("constants need l > 5");
}

namespace detail {

inline long double main_exp(int ell) { return 3.0L * (ell - 1) / ell; }       // 3 Delta
inline long double second_exp(int ell) { return 2.5L * (ell - 1) / ell; }      // 5 Delta / 2

inline long double g_ell_factor(int ell, Term t, WildWeight w) {
  long double L = ell, s = t == Term::main ? 3.0L / L : 2.5L / L;
  return 1 + wild_weight(ell, w).convert_to<long double>() * std::pow(L, -2 * (L - 1) * s);
}

// Euler factor of the bracket alone (g not fused), and the same times g's factor.
struct Factor {
  long double bracket, fused_minus_one;
};

inline Factor factor_at(int ell, std::uint64_t p, Term t, LocalScaling sc) {
  const long double x = static_cast<long double>(p), L = ell, delta = (L - 1) / L;
  const long double sgn = sc == LocalScaling::as_displayed ? -1 : 1;
  long double y, a1, a2, w1, w2;
  if (t == Term::main) {
    y = (L - 1) * std::pow(x, -3 * delta);
    long double cinv = 1 / (1 + 1 / x + 1 / (x * x));
    a1 = cinv / x;
    a2 = cinv / (x * x);
    w1 = std::pow(x, sgn * delta);
    w2 = std::pow(x, sgn * 2 * delta);
  } else {
    y = (L - 1) * std::pow(x, -2.5L * delta);
    a1 = secondary_density(p, RamType::partial);
    a2 = secondary_density(p, RamType::total);
    w1 = std::pow(x, sgn * 5 * delta / 6);
    w2 = std::pow(x, sgn * 5 * delta / 3);
  }
  long double inner = a1 * (w1 - 1) + a2 * (w2 - 1);
  return {1 + y / (1 + y) * inner, y + y * inner};
}

}  // namespace detail

inline long double euler_factor(int ell, std::uint64_t p, Term t, LocalScaling sc = LocalScaling::as_displayed) {
  return detail::factor_at(ell, p, t, sc).bracket;
}

inline std::vector<WildSummand> wild_summands(int ell, Term t, WildWeight w = WildWeight::displayed) {
  check_constants_ell(ell);
  const long double L = ell;
  const long double scale = t == Term::main ? 1 / L : 5 / (6 * L);  // L_rho^(1/m) or ^(5/6m)
  const long double gl = detail::g_ell_factor(ell, t, w);
  const auto p = static_cast<std::uint64_t>(ell);
  std::vector<WildSummand> out;
  for (RamType s : {RamType::unramified, RamType::partial, RamType::total})
    for (bool lam : {false, true}) {
      WildSummand ws{s, lam, 0, 1, 0, local_density(p, s, t)};
      if (lam && s != RamType::unramified) ws.e = (s == RamType::partial ? 1 : 2) * (ell - 1);
      ws.disc_ratio = std::pow(L, scale * ws.e);
      ws.g_ratio = lam ? (gl - 1) / gl : 1 / gl;
      out.push_back(ws);
    }
  return out;
}

inline long double wild_factor(int ell, Term t, WildWeight w = WildWeight::displayed) {
  long double s = 0;
  for (const auto& ws : wild_summands(ell, t, w)) s += ws.value();
  return s;
}

// log of prod over p = 1 mod l, p <= P of (g factor) x (bracket), in fixed blocks.
inline long double fused_log_product(int ell, std::uint64_t P, Term t, const EulerOptions& opt) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t p : primes_up_to(P))
    if (p % static_cast<std::uint64_t>(ell) == 1) ps.push_back(p);
  const std::size_t nb = (ps.size() + opt.block - 1) / opt.block;
  std::vector<long double> partial(nb, 0);
  auto job = [&](unsigned w, unsigned nw) {
    for (std::size_t b = w; b < nb; b += nw) {
      long double s = 0;
      std::size_t hi = std::min(ps.size(), (b + 1) * opt.block);
      for (std::size_t i = b * opt.block; i < hi; ++i) s += std::log1p(detail::factor_at(ell, ps[i], t, opt.scaling).fused_minus_one);
      partial[b] = s;
    }
  };
  unsigned nw = std::max(1u, opt.workers);
  if (nw == 1) job(0, 1);
  else {
    std::vector<std::thread> ts;
    for (unsigned w = 0; w < nw; ++w) ts.emplace_back(job, w, nw);
    for (auto& th : ts) th.join();
  }
  long double s = 0;
  for (long double v : partial) s += v;
  return s;
}

inline RawConstant raw_constant(int ell, std::uint64_t P, Term t, const EulerOptions& opt = {}) {
  check_constants_ell(ell);
  if (P < static_cast<std::uint64_t>(ell)) throw usage_error("prime bound must be at least l");
  RawConstant r;
  r.g_ell = detail::g_ell_factor(ell, t, opt.weight);
  r.wild = wild_factor(ell, t, opt.weight);
  r.log_product = fused_log_product(ell, P, t, opt);
  long double lead = t == Term::main ? const_A() : const_B();
  r.value = lead * r.g_ell * r.wild * std::exp(r.log_product);
  // |factor - 1| <= 2 (l-1) p^-sigma past P
  long double sigma = t == Term::main ? detail::main_exp(ell) : detail::second_exp(ell);
  r.truncation_bound = std::fabs(r.value) * std::expm1(2 * (ell - 1) * progression_tail(static_cast<long double>(P), sigma, ell));
  return r;
}

inline RawConstant C1_raw(int ell, std::uint64_t P, const EulerOptions& opt = {}) {
  return raw_constant(ell, P, Term::main, opt);
}

inline RawConstant C2_raw(int ell, std::uint64_t P, const EulerOptions& opt = {}) {
  return raw_constant(ell, P, Term::secondary, opt);
}

struct FinalConstants {
  int ell = 0;
  std::uint64_t P = 0;
  long double C1 = 0, C2 = 0;
  long double truncation_bound = 0;  // on each of C1, C2
  RawConstant raw1, raw2;
};

inline FinalConstants final_constants(int ell, std::uint64_t P, const EulerOptions& opt = {}) {
  FinalConstants f;
  f.ell = ell;
  f.P = P;
  f.raw1 = C1_raw(ell, P, opt);
  f.raw2 = C2_raw(ell, P, opt);
  f.C1 = (f.raw1.value - const_A()) / (ell - 1);
  f.C2 = (f.raw2.value - const_B()) / (ell - 1);
  f.truncation_bound = std::max(f.raw1.truncation_bound, f.raw2.truncation_bound) / (ell - 1);
  return f;
}

// Predicted S3 x C_l count C1 X^(1/l) + C2 X^(5/6l), from log X.
inline long double predicted_pair_count(const FinalConstants& f, long double logX) {
  return f.C1 * std::exp(logX / f.ell) + f.C2 * std::exp(logX * 5 / (6 * f.ell));
}

}  // namespace s3a

#endif
