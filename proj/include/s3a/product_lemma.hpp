#ifndef S3A_PRODUCT_LEMMA_HPP
#define S3A_PRODUCT_LEMMA_HPP

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "arith.hpp"
#include "core.hpp"

namespace s3a {

// Multiset of positive integers with F(X) <= A X^n ln^r X.
struct SyntheticMultiset {
  enum class Kind { integers, squares, finite, divisor_weighted };
  Kind kind = Kind::integers;
  std::vector<std::uint64_t> items;  // finite kind only
  std::uint64_t min_value = 1;       // divisor_weighted: n >= min_value
  Rational n = 1;
  int r = 0;
  long double A = 1;
  std::string name;

  static SyntheticMultiset integers() { return {Kind::integers, {}, 1, 1, 0, 1, "integers"}; }
  static SyntheticMultiset squares() { return {Kind::squares, {}, 1, Rational(1, 2), 0, 1, "squares"}; }
  static SyntheticMultiset finite(std::vector<std::uint64_t> v) {
    std::sort(v.begin(), v.end());
    long double a = static_cast<long double>(v.size());
    return {Kind::finite, std::move(v), 1, 0, 0, a, "finite"};
  }
  // n weighted by its number of divisors, n >= 2
  static SyntheticMultiset divisor_weighted() { return {Kind::divisor_weighted, {}, 2, 1, 1, 2, "divisor-weighted"}; }

  std::uint64_t count(std::uint64_t Y) const {
    switch (kind) {
      case Kind::integers: return Y;
      case Kind::squares: return iroot(BigInt(Y), 2).convert_to<std::uint64_t>();
      case Kind::finite:
        return static_cast<std::uint64_t>(std::upper_bound(items.begin(), items.end(), Y) - items.begin());
      case Kind::divisor_weighted: {
        // sum_{n <= Y} d(n) = sum_{k <= Y} floor(Y / k), minus d(1)
        if (Y < 1) return 0;
        std::uint64_t s = 0, k = 1;
        while (k <= Y) {
          std::uint64_t q = Y / k, k2 = Y / q;
          s += q * (k2 - k + 1);
          k = k2 + 1;
        }
        return s - 1;
      }
    }
    return 0;
  }

  // (value, multiplicity) for values <= Y
  std::vector<std::pair<std::uint64_t, std::uint64_t>> elements(std::uint64_t Y) const {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    switch (kind) {
      case Kind::integers:
        for (std::uint64_t v = 1; v <= Y; ++v) out.emplace_back(v, 1);
        break;
      case Kind::squares:
        for (std::uint64_t k = 1; k * k <= Y; ++k) out.emplace_back(k * k, 1);
        break;
      case Kind::finite:
        for (auto v : items)
          if (v <= Y) {
            if (!out.empty() && out.back().first == v) ++out.back().second;
            else out.emplace_back(v, 1);
          }
        break;
      case Kind::divisor_weighted: {
        std::vector<std::uint64_t> d(Y + 1, 0);
        for (std::uint64_t k = 1; k <= Y; ++k)
          for (std::uint64_t j = k; j <= Y; j += k) ++d[j];
        for (std::uint64_t v = std::max<std::uint64_t>(min_value, 1); v <= Y; ++v) out.emplace_back(v, d[v]);
        break;
      }
    }
    return out;
  }

  long double majorant(long double X) const {
    long double v = A * std::pow(X, to_double(n));
    if (r) v *= std::pow(std::log(X), r);
    return v;
  }
};

struct ProductLemmaRow {
  std::uint64_t X;
  std::uint64_t P;
  long double bound;
  long double ratio;  // P / (X^(n1/a) ln^r1 X)
};

struct ProductLemmaReport {
  std::vector<ProductLemmaRow> rows;
  bool bound_holds = true;
  bool hypotheses_hold = true;  // F_i <= A_i X^n_i ln^r_i X on the ladder
  long double last_decade_variation = 0;
  long double bound_constant = 0;
};

// #{(s1, s2) : s1^a s2^b <= X}
inline std::uint64_t product_count(const SyntheticMultiset& F1, const SyntheticMultiset& F2, unsigned a, unsigned b,
                                   std::uint64_t X) {
  std::uint64_t s2max = iroot(BigInt(X), b).convert_to<std::uint64_t>();
  std::uint64_t P = 0;
  for (auto [s2, mult] : F2.elements(s2max)) {
    BigInt rest = BigInt(X) / ipow(BigInt(s2), b);
    if (rest < 1) continue;
    P += mult * F1.count(iroot(rest, a).convert_to<std::uint64_t>());
  }
  return P;
}

inline ProductLemmaReport product_lemma_check(const SyntheticMultiset& F1, const SyntheticMultiset& F2, unsigned a,
                                              unsigned b, const std::vector<std::uint64_t>& ladder) {
  if (a == 0 || b == 0) throw usage_error("a and b must be positive");
  Rational gap = F1.n / a - F2.n / b;
  if (gap <= 0) throw hypothesis_error("needs n1/a > n2/b");
  if (ladder.empty()) throw usage_error("empty X ladder");
  ProductLemmaReport rep;
  long double fact = 1;
  for (int i = 2; i <= F2.r; ++i) fact *= i;
  const long double g = to_double(gap), e1 = to_double(F1.n / a);
  rep.bound_constant = F1.A * F2.A * fact / (std::pow((long double)b, F2.r) * std::pow((long double)a, F1.r)) /
                       std::pow(g, F2.r + 1) * e1;
  for (std::uint64_t X : ladder) {
    long double lx = std::log(static_cast<long double>(X));
    long double scale = std::pow(static_cast<long double>(X), e1) * (F1.r ? std::pow(lx, F1.r) : 1);
    ProductLemmaRow row{X, product_count(F1, F2, a, b, X), rep.bound_constant * scale, 0};
    row.ratio = row.P / scale;
    if (row.P > row.bound) rep.bound_holds = false;
    for (const auto* F : {&F1, &F2})
      if (X >= 2 && F->count(X) > F->majorant(static_cast<long double>(X)) * (1 + 1e-12L)) rep.hypotheses_hold = false;
    rep.rows.push_back(row);
  }
  std::uint64_t top = ladder.back();
  long double lo = 0, hi = 0, sum = 0;
  int n = 0;
  for (const auto& row : rep.rows)
    if (row.X * 10 >= top) {
      lo = n ? std::min(lo, row.ratio) : row.ratio;
      hi = n ? std::max(hi, row.ratio) : row.ratio;
      sum += row.ratio;
      ++n;
    }
  rep.last_decade_variation = n ? (hi - lo) / (sum / n) : 0;
  return rep;
}

inline std::vector<std::uint64_t> log_ladder(std::uint64_t lo, std::uint64_t hi, int points) {
  std::vector<std::uint64_t> out;
  for (int i = 0; i < points; ++i) {
    long double t = points == 1 ? 1 : static_cast<long double>(i) / (points - 1);
    auto v = static_cast<std::uint64_t>(std::llround(std::exp(std::log((long double)lo) * (1 - t) + std::log((long double)hi) * t)));
    if (out.empty() || v > out.back()) out.push_back(v);
  }
  return out;
}

}  // namespace s3a

#endif
