#ifndef S3A_PERMGROUP_HPP
#define S3A_PERMGROUP_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "core.hpp"

namespace s3a {

struct CycleType {
  std::vector<int> parts;  // descending

  CycleType() = default;
  explicit CycleType(std::vector<int> p) : parts(std::move(p)) {
    if (parts.empty()) throw std::invalid_argument("cycle type needs at least one part");
    for (int x : parts)
      if (x < 1) throw std::invalid_argument("cycle parts must be positive");
    std::sort(parts.begin(), parts.end(), std::greater<>());
  }

  int degree() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  bool operator==(const CycleType&) const = default;
};

// n minus the number of orbits
inline int index(const CycleType& ct) {
  return ct.degree() - static_cast<int>(ct.parts.size());
}

inline int pair_orbit_count(const CycleType& a, const CycleType& b) {
  int s = 0;
  for (int x : a.parts)
    for (int y : b.parts) s += std::gcd(x, y);
  return s;
}

inline int pair_index(const CycleType& a, const CycleType& b) {
  return a.degree() * b.degree() - pair_orbit_count(a, b);
}

enum class InertiaKind { unramified, s3_partial, s3_total, abelian };

struct TameInertia {
  InertiaKind kind = InertiaKind::unramified;
  int order = 1;   // element order, abelian case only
  int degree = 1;  // |A| for the abelian case

  static TameInertia unramified() { return {}; }
  static TameInertia s3_partial() { return {InertiaKind::s3_partial, 2, 3}; }
  static TameInertia s3_total() { return {InertiaKind::s3_total, 3, 3}; }
  static TameInertia abelian(int order, int m) {
    if (order <= 1 || m % order != 0)
      throw std::invalid_argument("abelian inertia needs a non-identity element order dividing |A|");
    return {InertiaKind::abelian, order, m};
  }

  bool ramified() const { return kind != InertiaKind::unramified; }

  CycleType cycle_type() const {
    switch (kind) {
      case InertiaKind::s3_partial: return CycleType({2, 1});
      case InertiaKind::s3_total: return CycleType({3});
      case InertiaKind::abelian: return CycleType(std::vector<int>(degree / order, order));
      default: throw std::logic_error("unramified inertia has no cycle type");
    }
  }

  bool operator==(const TameInertia&) const = default;
};

inline std::string to_string(const TameInertia& t) {
  switch (t.kind) {
    case InertiaKind::unramified: return "unramified";
    case InertiaKind::s3_partial: return "partial";
    case InertiaKind::s3_total: return "total";
    default: return "order" + std::to_string(t.order);
  }
}

// Disc(sigma)^m Disc(lambda)^3 / Disc(sigma,lambda) exponent for tame data; 0 if either side is unramified.
inline int compositum_exponent_tame(const TameInertia& sigma, const TameInertia& lambda, int m) {
  if (!sigma.ramified() || !lambda.ramified()) return 0;
  CycleType s = sigma.cycle_type(), l = lambda.cycle_type();
  if (l.degree() != m) throw std::invalid_argument("lambda degree does not match m");
  int n = s.degree();
  return m * index(s) + n * index(l) - pair_index(s, l);
}

// Same exponent when the two element orders are coprime: every cycle pair merges to one orbit.
inline int compositum_exponent_coprime(const TameInertia& sigma, const TameInertia& lambda, int m) {
  if (!sigma.ramified() || !lambda.ramified()) return 0;
  CycleType s = sigma.cycle_type(), l = lambda.cycle_type();
  if (std::gcd(sigma.order, lambda.order) != 1)
    throw std::invalid_argument("orders not coprime");
  int n = s.degree();
  int k = static_cast<int>(s.parts.size()), kl = k * static_cast<int>(l.parts.size());
  return m * index(s) + n * index(l) - (n * m - kl);
}

class AbelianGroupSpec {
 public:
  AbelianGroupSpec() = default;
  explicit AbelianGroupSpec(std::vector<int> factors) : factors_(std::move(factors)) { validate(); }

  // grammar: C<n>[xC<n>]*
  static AbelianGroupSpec parse(const std::string& s) {
    std::vector<int> f;
    std::size_t i = 0;
    while (i < s.size()) {
      if (s[i] != 'C') throw usage_error("group spec must look like C7 or C3xC9: " + s);
      ++i;
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == i || j - i > 9) throw usage_error("bad cyclic factor in " + s);
      f.push_back(std::stoi(s.substr(i, j - i)));
      i = j;
      if (i < s.size()) {
        if (s[i] != 'x' || i + 1 == s.size()) throw usage_error("bad separator in " + s);
        ++i;
      }
    }
    if (f.empty()) throw usage_error("empty group spec");
    try {
      return AbelianGroupSpec(f);
    } catch (const std::invalid_argument& e) {
      throw usage_error(e.what());
    }
  }

  const std::vector<int>& factors() const { return factors_; }
  int m() const { return m_; }
  int p_min() const { return p_min_; }
  int ind() const { return m_ - m_ / p_min_; }
  int a() const { return ind(); }
  Rational delta() const { return Rational(ind(), m_); }
  int exponent() const {
    int e = 1;
    for (int n : factors_) e = std::lcm(e, n);
    return e;
  }

  std::string label() const {
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) s += (i ? "xC" : "C") + std::to_string(factors_[i]);
    return s;
  }

  // order -> number of elements of that order, identity excluded
  std::map<int, long long> order_spectrum() const {
    std::map<int, long long> divides;  // #{x : x^d = 1}
    int ex = exponent();
    std::vector<int> divs;
    for (int d = 1; d <= ex; ++d)
      if (ex % d == 0) divs.push_back(d);
    for (int d : divs) {
      long long c = 1;
      for (int n : factors_) c *= std::gcd(d, n);
      divides[d] = c;
    }
    std::map<int, long long> exact;
    for (int e : divs) {
      long long c = divides[e];
      for (int d : divs)
        if (d < e && e % d == 0) c -= exact[d];
      exact[e] = c;
    }
    exact.erase(1);
    return exact;
  }

  // Exhaustive minimum of m - m/ord over non-identity elements; capped size.
  int ind_exhaustive() const {
    if (m_ > 10000) throw bound_error("exhaustive element scan limited to |A| <= 10^4");
    int best = m_;
    std::vector<int> x(factors_.size(), 0);
    for (long long k = 1; k < m_; ++k) {
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (++x[i] < factors_[i]) break;
        x[i] = 0;
      }
      int ord = 1;
      for (std::size_t i = 0; i < x.size(); ++i)
        ord = std::lcm(ord, factors_[i] / std::gcd(x[i], factors_[i]));
      best = std::min(best, m_ - m_ / ord);
    }
    return best;
  }

  bool operator==(const AbelianGroupSpec& o) const { return factors_ == o.factors_; }

 private:
  void validate() {
    if (factors_.empty()) throw std::invalid_argument("no cyclic factors");
    long long m = 1;
    for (int n : factors_) {
      if (n <= 1) throw std::invalid_argument("cyclic factors must exceed 1");
      if (n % 2 == 0) throw std::invalid_argument("group must have odd order");
      m *= n;
      if (m > (1LL << 30)) throw std::invalid_argument("group order too large");
    }
    m_ = static_cast<int>(m);
    p_min_ = m_;
    for (int p = 3; p * p <= m_; p += 2)
      if (m_ % p == 0) { p_min_ = p; break; }
  }

  std::vector<int> factors_;
  int m_ = 1;
  int p_min_ = 1;
};

// All odd abelian groups of order <= max_m, one per isomorphism class (invariant factors n1 | n2 | ...).
inline std::vector<AbelianGroupSpec> odd_abelian_groups(int max_m) {
  std::vector<AbelianGroupSpec> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int prod, int last) -> void {
    if (!cur.empty()) out.emplace_back(cur);
    for (int n = last; prod * n <= max_m; n += last) {
      if (n % 2 == 0 || n == 1) continue;
      if (!cur.empty() && n % cur.back() != 0) continue;
      cur.push_back(n);
      self(self, prod * n, n);
      cur.pop_back();
    }
  };
  for (int n = 3; n <= max_m; n += 2) {
    cur = {n};
    rec(rec, n, n);
  }
  std::sort(out.begin(), out.end(), [](const AbelianGroupSpec& a, const AbelianGroupSpec& b) {
    return a.m() != b.m() ? a.m() < b.m() : a.factors() < b.factors();
  });
  return out;
}

struct IndexBoundResult {
  bool holds = true;
  std::vector<int> violating_orders;
};

// pair_index((12)(3), c) > 2m and pair_index((123), c) > m for all c != e
inline IndexBoundResult index_bound_check(const AbelianGroupSpec& A) {
  IndexBoundResult r;
  int m = A.m();
  for (auto [ord, cnt] : A.order_spectrum()) {
    (void)cnt;
    CycleType c = TameInertia::abelian(ord, m).cycle_type();
    bool ok = pair_index(CycleType({2, 1}), c) > 2 * m && pair_index(CycleType({3}), c) > m;
    if (!ok) {
      r.holds = false;
      r.violating_orders.push_back(ord);
    }
  }
  return r;
}

}  // namespace s3a

#endif
