#ifndef S3A_EXPONENT_CALCULUS_HPP
#define S3A_EXPONENT_CALCULUS_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "core.hpp"
#include "densities.hpp"
#include "permgroup.hpp"
#include "special_functions.hpp"

namespace s3a {

struct CellExponent {
  int i = 1;           // 1 partial (12)(3), 2 total (123)
  int order = 0;       // order of b_j
  int ind_b = 0;       // ind(b_j)
  int pair_idx = 0;    // ind(a_i, b_j)
  Rational e, d, delta;
  Rational U() const { return (e + 1) / delta; }
  Rational V() const { return (d + 1) / delta; }
};

struct ExponentProfile {
  AbelianGroupSpec A;
  Rational a, b;
  Rational a_beta_gamma;
  std::vector<CellExponent> cells;
  Rational U1, U2, V1, V2;
  Rational q_exponent;  // Q = X^{q_exponent}
  Rational U() const { return std::max(U1, U2); }
  Rational V() const { return std::max(V1, V2); }
};

// Closed form (a - 2 Delta + 1)/(1 + 3 Delta) / m, clamped at zero.
inline Rational a_beta_gamma(const AbelianGroupSpec& A, const Rational& a, const Rational& /*b*/) {
  Rational D = A.delta();
  Rational v = (a - 2 * D + 1) / (1 + 3 * D) / A.m();
  return v > 0 ? v : Rational(0);
}

// Max over all cells of (a_i - 2 ind(b_j)/m + 1)/(m ind(a_i) + 3 ind(b_j)), clamped.
inline Rational a_beta_gamma_cells(const AbelianGroupSpec& A, const Rational& a, const Rational& b) {
  int m = A.m();
  Rational best = 0;
  for (auto [ord, cnt] : A.order_spectrum()) {
    (void)cnt;
    int ib = m - m / ord;
    for (int i = 1; i <= 2; ++i) {
      Rational num = (i == 1 ? a : b) - Rational(2 * ib, m) + 1;
      Rational v = num / Rational(m * i + 3 * ib);
      best = std::max(best, v);
    }
  }
  return best;
}

inline ExponentProfile cell_exponents(const AbelianGroupSpec& A, const Rational& a = Rational(4, 5),
                                      const Rational& b = Rational(4, 5)) {
  ExponentProfile P;
  P.A = A;
  P.a = a;
  P.b = b;
  int m = A.m();
  P.a_beta_gamma = a_beta_gamma(A, a, b);
  Rational w = Rational(2, 3 * m) + P.a_beta_gamma;
  bool first1 = true, first2 = true;
  for (auto [ord, cnt] : A.order_spectrum()) {
    (void)cnt;
    CycleType cb = TameInertia::abelian(ord, m).cycle_type();
    for (int i = 1; i <= 2; ++i) {
      CellExponent c;
      c.i = i;
      c.order = ord;
      c.ind_b = index(cb);
      c.pair_idx = pair_index(i == 1 ? CycleType({2, 1}) : CycleType({3}), cb);
      if (i == 1) {
        c.e = a + Rational(2, 3) - c.pair_idx * w;
        c.d = Rational(5, 6) - Rational(c.pair_idx, m);
      } else {
        c.e = b + Rational(4, 3) - c.pair_idx * w;
        c.d = -Rational(c.pair_idx, m);
      }
      c.delta = c.e - c.d;
      if (c.delta > 0) {
        Rational u = c.U(), v = c.V();
        if (i == 1) {
          P.U1 = first1 ? u : std::max(P.U1, u);
          P.V1 = first1 ? v : std::max(P.V1, v);
          first1 = false;
        } else {
          P.U2 = first2 ? u : std::max(P.U2, u);
          P.V2 = first2 ? v : std::max(P.V2, v);
          first2 = false;
        }
      }
      P.cells.push_back(c);
    }
  }
  P.q_exponent = Rational(1, 3 * m) - P.a_beta_gamma;
  return P;
}

struct InequalityReport {
  bool secondaryTerm = false;
  bool powerSaving = false;
  bool all_delta_positive = true;
  Rational small_exponent;  // from the (e+1)/delta family
  Rational large_exponent;  // from the (d+1)/delta family
  Rational error_exponent;  // max of the two
  Rational secondary_slack; // 5/6m - error_exponent
  Rational main_slack;      // 1/m - error_exponent
};

inline InequalityReport evaluate(const ExponentProfile& P) {
  InequalityReport r;
  int m = P.A.m();
  for (const auto& c : P.cells)
    if (c.delta <= 0) r.all_delta_positive = false;
  Rational qe = P.q_exponent;
  r.small_exponent = Rational(2, 3 * m) + P.a_beta_gamma + qe * P.U();
  r.large_exponent = Rational(1, m) + qe * P.V();
  r.error_exponent = std::max(r.small_exponent, r.large_exponent);
  r.secondary_slack = Rational(5, 6 * m) - r.error_exponent;
  r.main_slack = Rational(1, m) - r.error_exponent;
  r.secondaryTerm = r.all_delta_positive && r.secondary_slack > 0;
  r.powerSaving = r.all_delta_positive && r.main_slack > 0;
  return r;
}

inline InequalityReport verify_inequalities(const AbelianGroupSpec& A, const Rational& a = Rational(4, 5),
                                            const Rational& b = Rational(4, 5)) {
  return evaluate(cell_exponents(A, a, b));
}

enum class SavingLevel { secondary, main };

inline bool default_dependency(const Rational& a, const Rational& b) {
  return a == Rational(4, 5) && b == Rational(4, 5);
}

// Tabulated closed form for p_min > 7 (min of the two branches), over 6m.
inline Rational power_saving_closed_form(const AbelianGroupSpec& A, const Rational& a, const Rational& b) {
  Rational D = A.delta();
  Rational x = (Rational(10, 3) * D - a - Rational(11, 6)) / (Rational(1, 6) + a + Rational(2, 3) * D);
  Rational y = (Rational(5, 3) * D - b) / (2 + b + D / 3);
  return std::min(x, y) / (6 * A.m());
}

// Saving read straight off the inequality machinery.
inline Rational power_saving_machinery(const AbelianGroupSpec& A, const Rational& a, const Rational& b,
                                       SavingLevel* level = nullptr) {
  InequalityReport r = verify_inequalities(A, a, b);
  if (A.p_min() > 5) {
    if (!r.secondaryTerm) throw not_applicable_error("no saving below the secondary term for " + A.label());
    if (level) *level = SavingLevel::secondary;
    return r.secondary_slack;
  }
  if (!r.powerSaving) throw not_applicable_error("no saving below the main term for " + A.label());
  if (level) *level = SavingLevel::main;
  return r.main_slack;
}

// The tabulated delta (epsilon dropped); falls back to the machinery when a, b are not 4/5.
inline Rational power_saving(const AbelianGroupSpec& A, const Rational& a = Rational(4, 5),
                             const Rational& b = Rational(4, 5)) {
  InequalityReport r = verify_inequalities(A, a, b);
  int p = A.p_min(), m = A.m();
  if (p > 5 ? !r.secondaryTerm : !r.powerSaving)
    throw not_applicable_error("no provable saving for " + A.label());
  if (p > 7) return power_saving_closed_form(A, a, b);
  if (!default_dependency(a, b)) return power_saving_machinery(A, a, b);
  if (p == 7) return Rational(23, 1254 * m);
  if (p == 5) return Rational(322, 2061 * m);
  return Rational(24, 283 * m);
}

struct PowerSavingCheck {
  Rational tabulated;
  Rational machinery;
  SavingLevel level = SavingLevel::secondary;
  bool agree = false;
  std::string note;
};

inline PowerSavingCheck power_saving_crosscheck(const AbelianGroupSpec& A, const Rational& a = Rational(4, 5),
                                                const Rational& b = Rational(4, 5)) {
  PowerSavingCheck c;
  c.tabulated = power_saving(A, a, b);
  c.machinery = power_saving_machinery(A, a, b, &c.level);
  c.agree = c.tabulated == c.machinery;
  if (!c.agree) {
    c.note = "tabulated delta " + to_string(c.tabulated) + " differs from recomputed " + to_string(c.machinery);
    // locate the binding cell
    ExponentProfile P = cell_exponents(A, a, b);
    for (const auto& cell : P.cells) {
      Rational lhs = c.level == SavingLevel::secondary ? Rational(5, 6 * A.m()) : Rational(1, A.m());
      Rational s = lhs - (Rational(2, 3 * A.m()) + P.a_beta_gamma + P.q_exponent * cell.U());
      if (s == c.machinery)
        c.note += "; binding cell i=" + std::to_string(cell.i) + " order=" + std::to_string(cell.order);
    }
  }
  return c;
}

// Brute-force lattice sums for the weight lemmas.
enum class Direction { le, ge };

struct CalcweightResult {
  long double sum = 0;
  long double fitted_exponent = 0;
  long double predicted_exponent = 0;
  std::vector<std::pair<long double, long double>> ladder;  // (X, sum)
};

namespace detail {

inline long double kmax_for(long double Y, long double beta) {
  if (Y < 1) return 0;
  long double k = std::floor(std::pow(Y, 1 / beta) * (1 + 1e-15L));
  while (k >= 1 && std::pow(k, beta) > Y * (1 + 1e-13L)) k -= 1;
  while (std::pow(k + 1, beta) <= Y * (1 + 1e-13L)) k += 1;
  return k;
}

struct LeSummer {
  std::vector<long double> beta, gamma;
  std::vector<long double> prefix;  // prefix sums of k^gamma_last

  long double sum(std::size_t j, long double Y) const {
    long double K = kmax_for(Y, beta[j]);
    if (K < 1) return 0;
    if (j + 1 == beta.size()) return prefix[static_cast<std::size_t>(K)];
    long double s = 0;
    for (long double k = 1; k <= K; k += 1)
      s += std::pow(k, gamma[j]) * sum(j + 1, Y / std::pow(k, beta[j]));
    return s;
  }
};

struct GeSummer {
  std::vector<long double> beta, gamma;
  std::vector<long double> zeta_full;  // zeta(-gamma_i)

  long double tail(std::size_t j, long double a) const {
    return hurwitz_tail<long double>(-gamma[j], static_cast<double>(a));
  }

  long double rest_product(std::size_t j) const {
    long double p = 1;
    for (std::size_t i = j; i < beta.size(); ++i) p *= zeta_full[i];
    return p;
  }

  long double sum(std::size_t j, long double Y) const {
    if (Y <= 1) return rest_product(j);
    long double K = kmax_for(Y, beta[j]);
    if (std::pow(K, beta[j]) < Y * (1 - 1e-13L)) K += 1;  // least k with k^beta >= Y
    if (j + 1 == beta.size()) return tail(j, K);
    long double s = 0;
    for (long double k = 1; k < K; k += 1) s += std::pow(k, gamma[j]) * sum(j + 1, Y / std::pow(k, beta[j]));
    return s + tail(j, K) * rest_product(j + 1);
  }
};

}  // namespace detail

inline long double predicted_weight_exponent(const std::vector<Rational>& beta, const std::vector<Rational>& gamma) {
  long double best = -1e300L;
  for (std::size_t i = 0; i < beta.size(); ++i)
    best = std::max(best, ((gamma[i] + 1) / beta[i]).convert_to<long double>());
  return best;
}

inline CalcweightResult calcweight_bruteforce(const std::vector<Rational>& beta, const std::vector<Rational>& gamma,
                                              long double X, Direction dir) {
  if (beta.empty() || beta.size() != gamma.size()) throw hypothesis_error("beta and gamma must have equal positive length");
  for (const auto& b : beta)
    if (b <= 0) throw hypothesis_error("beta entries must be positive");
  if (dir == Direction::ge)
    for (const auto& g : gamma)
      if (g >= -1) throw hypothesis_error("the tail sum needs every gamma_i < -1");
  if (X < 10) throw hypothesis_error("X too small to fit a growth exponent");

  std::vector<long double> bl, gl;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    bl.push_back(beta[i].convert_to<long double>());
    gl.push_back(gamma[i].convert_to<long double>());
  }

  CalcweightResult res;
  res.predicted_exponent = predicted_weight_exponent(beta, gamma);
  const int steps = 4;
  std::vector<long double> xs;
  for (int k = steps; k >= 0; --k) xs.push_back(X * std::pow(10.0L, -static_cast<long double>(k) / steps));

  if (dir == Direction::le) {
    detail::LeSummer S{bl, gl, {}};
    long double kmax = detail::kmax_for(X, bl.back());
    if (kmax > 5e7L) throw bound_error("lattice too large for brute force");
    S.prefix.assign(static_cast<std::size_t>(kmax) + 2, 0);
    for (std::size_t k = 1; k < S.prefix.size(); ++k)
      S.prefix[k] = S.prefix[k - 1] + std::pow(static_cast<long double>(k), gl.back());
    for (long double x : xs) res.ladder.emplace_back(x, S.sum(0, x));
  } else {
    detail::GeSummer S{bl, gl, {}};
    for (long double g : gl) S.zeta_full.push_back(zeta_em<long double>(-g, 20, 12));
    for (long double x : xs) res.ladder.emplace_back(x, S.sum(0, x));
  }
  res.sum = res.ladder.back().second;

  // least-squares slope of log sum against log X
  long double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (auto [x, s] : res.ladder) {
    if (s <= 0) continue;
    long double lx = std::log(x), ly = std::log(s);
    sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
    ++n;
  }
  if (n >= 2) res.fitted_exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return res;
}

}  // namespace s3a

#endif
