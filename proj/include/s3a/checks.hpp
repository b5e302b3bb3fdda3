#ifndef S3A_CHECKS_HPP
#define S3A_CHECKS_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "cubic_enum.hpp"
#include "densities.hpp"
#include "euler_constants.hpp"
#include "exponent_calculus.hpp"
#include "product_lemma.hpp"
#include "sieve_engine.hpp"

namespace s3a {

struct CheckResult {
  bool pass = false;
  std::string detail;
};

// lo^(1-t) hi^t for t = i/(n-1), as integers
inline std::vector<BigInt> big_log_ladder(const BigInt& lo, const BigInt& hi, int n) {
  using F = boost::multiprecision::cpp_bin_float_50;
  std::vector<BigInt> out;
  F a = log(F(lo)), b = log(F(hi));
  for (int i = 0; i < n; ++i) {
    F t = n == 1 ? F(1) : F(i) / (n - 1);
    BigInt x = static_cast<BigInt>(floor(exp(a * (1 - t) + b * t)));
    if (i == 0) x = lo;
    if (i == n - 1) x = hi;
    out.push_back(x);
  }
  return out;
}

struct SieveCheckOptions {
  int ell = 7;
  std::uint64_t cubic_pool = 10000;
  BigInt abelian_pool = ipow(BigInt(29), 6) * 1000;
  int points = 20;
  unsigned workers = 1;
};

struct SieveCheckRow {
  BigInt X;
  BigInt G, direct;
  std::size_t terms = 0;
};

inline std::vector<SieveCheckRow> sieve_identity_rows(const SieveCheckOptions& o) {
  auto U = PairUniverse::build(o.ell, o.cubic_pool, o.abelian_pool, o.workers);
  auto [lo, hi] = pair_disc_range(U);
  std::vector<SieveCheckRow> rows;
  for (const BigInt& X : big_log_ladder(lo, hi, o.points)) {
    auto a = assemble_G(X, U, CoveragePolicy::pool);
    rows.push_back({X, a.G, direct_pair_count(X, U, CoveragePolicy::pool, o.workers), a.terms.size()});
  }
  return rows;
}

inline CheckResult check_sieve_identity(const SieveCheckOptions& o = {}) {
  auto rows = sieve_identity_rows(o);
  CheckResult r{true, ""};
  std::ostringstream s;
  for (const auto& row : rows)
    if (row.G != row.direct) {
      r.pass = false;
      s << "mismatch at X=" << row.X << ": " << row.G << " vs " << row.direct << "; ";
    }
  s << rows.size() << " X values, G from " << rows.front().G << " to " << rows.back().G;
  r.detail = s.str();
  return r;
}

// Strict-coverage example at X = 2 * 23^7 * 29^18.
inline CheckResult check_sieve_strict_example(unsigned workers = 1) {
  auto U = PairUniverse::build(7, 150000, BigInt(1200000000000ULL), workers);
  BigInt X = 2 * ipow(BigInt(23), 7) * ipow(BigInt(29), 18);
  if (!U.covers(X)) return {false, "pools do not cover the example"};
  auto a = assemble_G(X, U);
  auto d = direct_pair_count(X, U, CoveragePolicy::strict, workers);
  return {a.G == d, "X=2*23^7*29^18: G=" + a.G.str() + " direct=" + d.str()};
}

struct FitRow {
  std::uint64_t X;
  std::uint64_t N;
  long double residual, scaled;  // N - AX - BX^(5/6), residual / X^(5/6)
};

inline std::vector<FitRow> cubic_fit_rows(const CubicTable& t, const std::vector<std::uint64_t>& xs) {
  std::vector<FitRow> out;
  for (std::uint64_t X : xs) {
    long double x = static_cast<long double>(X);
    std::uint64_t N = t.count(X);
    long double res = N - const_A() * x - const_B() * std::pow(x, 5.0L / 6);
    out.push_back({X, N, res, res / std::pow(x, 5.0L / 6)});
  }
  return out;
}

inline CheckResult check_cubic_fit(const CubicTable& t) {
  auto rows = cubic_fit_rows(t, {10000, 100000, 1000000});
  std::ostringstream s;
  const auto& last = rows.back();
  bool small = std::fabs(last.residual) <= 0.03L * const_A() * last.X;
  bool decreasing = true;
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (!(std::fabs(rows[i].scaled) < std::fabs(rows[i - 1].scaled))) decreasing = false;
  s << "N(1e6)=" << last.N << " residual=" << static_cast<double>(last.residual)
    << (small ? " within" : " outside") << " 3% of AX; residual/X^(5/6):";
  for (const auto& r : rows) s << " " << static_cast<double>(r.scaled);
  s << (decreasing ? " (decreasing)" : " (not decreasing)");
  return {small && decreasing, s.str()};
}

inline CheckResult check_uniformity(const CubicTable& t, std::uint64_t X = 1000000, std::uint64_t qmax = 50) {
  long double base = static_cast<long double>(t.count_with_conditions(X, 1, 1)) / X;
  long double worst_q = 0, worst_r = 0;
  std::uint64_t arg_q = 1, arg_r = 1;
  for (std::uint64_t q = 1; q <= qmax; ++q) {
    if (!is_squarefree(q) || q % 2 == 0 || q % 3 == 0) continue;
    long double a = t.count_with_conditions(X, q, 1) * std::pow(static_cast<long double>(q), 1.0L / 6) / X;
    long double b = t.count_with_conditions(X, 1, q) * static_cast<long double>(q) * q / X;
    if (a > worst_q) { worst_q = a; arg_q = q; }
    if (b > worst_r) { worst_r = b; arg_r = q; }
  }
  std::ostringstream s;
  s << "base " << static_cast<double>(base) << ", max q-ratio " << static_cast<double>(worst_q) << " at q=" << arg_q
    << ", max r-ratio " << static_cast<double>(worst_r) << " at r=" << arg_r;
  return {worst_q <= 10 * base && worst_r <= 10 * base, s.str()};
}

struct CalcweightInstance {
  std::vector<Rational> beta, gamma;
  Direction dir;
};

inline std::string describe(const CalcweightInstance& c) {
  std::string s = c.dir == Direction::le ? "le beta=(" : "ge beta=(";
  for (std::size_t i = 0; i < c.beta.size(); ++i) s += (i ? "," : "") + to_string(c.beta[i]);
  s += ") gamma=(";
  for (std::size_t i = 0; i < c.gamma.size(); ++i) s += (i ? "," : "") + to_string(c.gamma[i]);
  return s + ")";
}

// Random instances with a unique maximum of (gamma+1)/beta, separated by at least 1/4.
inline std::vector<CalcweightInstance> calcweight_instances(Direction dir, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::vector<Rational> betas{1, Rational(3, 2), 2, Rational(5, 2), 3};
  const std::vector<Rational> le_gammas{Rational(-1, 2), 0, Rational(1, 2), 1, Rational(3, 2)};
  const std::vector<Rational> ge_gammas{Rational(-3, 2), -2, Rational(-5, 2), -3, Rational(-7, 2)};
  const auto& gammas = dir == Direction::le ? le_gammas : ge_gammas;
  std::vector<CalcweightInstance> out;
  while (static_cast<int>(out.size()) < count) {
    std::size_t n = 1 + rng() % (dir == Direction::le ? 3 : 2);
    CalcweightInstance c{{}, {}, dir};
    for (std::size_t i = 0; i < n; ++i) {
      c.beta.push_back(betas[rng() % betas.size()]);
      c.gamma.push_back(gammas[rng() % gammas.size()]);
    }
    std::vector<Rational> w;
    for (std::size_t i = 0; i < n; ++i) w.push_back((c.gamma[i] + 1) / c.beta[i]);
    std::sort(w.rbegin(), w.rend());
    if (n > 1 && w[0] - w[1] < Rational(1, 4)) continue;
    if (dir == Direction::le && w[0] < Rational(1, 4)) continue;  // convergent sums have no growth to fit
    out.push_back(c);
  }
  return out;
}

inline CheckResult check_calcweight(Direction dir, std::uint64_t seed = 1, long double X = 1e6L, int count = 10) {
  CheckResult r{true, ""};
  long double worst = 0;
  for (const auto& c : calcweight_instances(dir, count, seed)) {
    auto res = calcweight_bruteforce(c.beta, c.gamma, X, dir);
    long double err = std::fabs(res.fitted_exponent - res.predicted_exponent);
    worst = std::max(worst, err);
    if (err > 0.05L) {
      r.pass = false;
      r.detail += describe(c) + " fitted " + std::to_string(static_cast<double>(res.fitted_exponent)) + "; ";
    }
  }
  r.detail += std::to_string(count) + " instances, worst |fit - max (gamma+1)/beta| = " + std::to_string(static_cast<double>(worst));
  return r;
}

struct ProductLemmaInstance {
  SyntheticMultiset F1, F2;
  unsigned a, b;
  std::string name() const { return F1.name + "/" + F2.name + " a=" + std::to_string(a) + " b=" + std::to_string(b); }
};

inline std::vector<ProductLemmaInstance> product_lemma_instances() {
  using S = SyntheticMultiset;
  return {{S::integers(), S::integers(), 1, 3},
          {S::integers(), S::squares(), 1, 2},
          {S::squares(), S::integers(), 1, 4},
          {S::integers(), S::finite({1, 2, 3}), 2, 1},
          {S::integers(), S::divisor_weighted(), 1, 2}};
}

inline CheckResult check_product_lemma(std::uint64_t Xmax = 1000000000000ULL) {
  CheckResult r{true, ""};
  auto ladder = log_ladder(100, Xmax, 25);
  long double worst = 0;
  for (const auto& inst : product_lemma_instances()) {
    auto rep = product_lemma_check(inst.F1, inst.F2, inst.a, inst.b, ladder);
    worst = std::max(worst, rep.last_decade_variation);
    if (!rep.bound_holds || !rep.hypotheses_hold || rep.last_decade_variation >= 0.02L) {
      r.pass = false;
      r.detail += inst.name() + " failed; ";
    }
  }
  r.detail += "5 instances, worst last-decade variation " + std::to_string(static_cast<double>(worst));
  return r;
}

inline CheckResult check_constants(int ell = 7, unsigned workers = 1) {
  EulerOptions o;
  o.workers = workers;
  auto a = final_constants(ell, 100000, o), b = final_constants(ell, 1000000, o);
  long double d1 = std::fabs(a.C1 - b.C1), d2 = std::fabs(a.C2 - b.C2);
  bool stable = d1 <= 1e-6L && d2 <= 1e-6L;
  bool honest = a.truncation_bound >= std::max(d1, d2);
  std::ostringstream s;
  s.precision(10);
  s << "C1=" << static_cast<double>(b.C1) << " C2=" << static_cast<double>(b.C2) << " drift " << static_cast<double>(d1)
    << "/" << static_cast<double>(d2) << " bound " << static_cast<double>(a.truncation_bound);
  return {stable && honest, s.str()};
}

}  // namespace s3a

#endif
