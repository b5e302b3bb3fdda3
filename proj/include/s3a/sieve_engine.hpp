#ifndef S3A_SIEVE_ENGINE_HPP
#define S3A_SIEVE_ENGINE_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "abelian_enum.hpp"
#include "arith.hpp"
#include "core.hpp"
#include "cubic_enum.hpp"
#include "densities.hpp"
#include "dirichlet.hpp"
#include "field_record.hpp"
#include "permgroup.hpp"
#include "product_lemma.hpp"

namespace s3a {

struct SieveCell {
  int i = 1;      // 1: (12)(3), 2: (123)
  int order = 0;  // order of the abelian inertia generator
  auto operator<=>(const SieveCell&) const = default;
};

inline TameInertia cell_sigma(const SieveCell& c) {
  return c.i == 1 ? TameInertia::s3_partial() : TameInertia::s3_total();
}

inline std::vector<SieveCell> sieve_cells(const AbelianGroupSpec& A) {
  std::vector<SieveCell> out;
  for (int i = 1; i <= 2; ++i)
    for (auto [ord, cnt] : A.order_spectrum()) {
      (void)cnt;
      out.push_back({i, ord});
    }
  std::sort(out.begin(), out.end());
  return out;
}

struct WildPair {
  LocalDatum sigma, lambda;
  bool operator==(const WildPair&) const = default;
};

struct LocalConditionRho {
  std::map<std::uint64_t, WildPair> wild;  // p in T; absent p is unconstrained
  std::map<SieveCell, std::uint64_t> q;    // squarefree, pairwise coprime, prime to T

  std::uint64_t support() const {
    std::uint64_t s = 1;
    for (auto& [c, v] : q) s *= v;
    return s;
  }
};

inline std::string to_string(const LocalConditionRho& r) {
  std::string s = "{";
  bool first = true;
  for (auto& [p, w] : r.wild) {
    s += (first ? "" : ", ") + std::to_string(p) + ":(" + to_string(w.sigma) + "," + to_string(w.lambda) + ")";
    first = false;
  }
  for (auto& [c, v] : r.q) {
    if (v == 1) continue;
    s += (first ? "" : ", ") + std::string(c.i == 1 ? "q_partial" : "q_total") + "[" + std::to_string(c.order) +
         "]=" + std::to_string(v);
    first = false;
  }
  return s + "}";
}

inline std::vector<std::uint64_t> wild_primes(const AbelianGroupSpec& A) {
  std::vector<std::uint64_t> T{2, 3};
  for (auto [p, e] : factor_u64(static_cast<std::uint64_t>(A.m())))
    if (p > 3) T.push_back(p);
  return T;
}

// Exponent of p in Disc(K)^m Disc(L)^3 / Disc(KL) from the two local data.
inline int compositum_exponent(const LocalDatum& s, const LocalDatum& l, const AbelianGroupSpec& A) {
  if (!s.ramified() || !l.ramified()) return 0;
  if (!s.wild && !l.wild) return compositum_exponent_tame(s.tame, l.tame, A.m());
  int ell = A.m();
  bool cyclic_prime = A.factors().size() == 1 && is_prime_u64(static_cast<std::uint64_t>(ell));
  if (!s.wild && l.wild && cyclic_prime && ell > 5 && l.p == static_cast<std::uint64_t>(ell) &&
      l.exponent == 2 * (ell - 1))
    return index(s.tame.cycle_type()) * (ell - 1);
  throw unsupported_wild_error("no discriminant rule for " + to_string(s) + " against " + to_string(l));
}

inline BigInt L_rho(const LocalConditionRho& rho, const AbelianGroupSpec& A) {
  BigInt L = 1;
  for (auto& [p, w] : rho.wild) L *= ipow(BigInt(p), static_cast<unsigned>(compositum_exponent(w.sigma, w.lambda, A)));
  for (auto& [c, v] : rho.q) {
    int e = compositum_exponent_tame(cell_sigma(c), TameInertia::abelian(c.order, A.m()), A.m());
    L *= ipow(BigInt(v), static_cast<unsigned>(e));
  }
  return L;
}

inline BigInt pair_discriminant(const FieldRecord& K, const FieldRecord& L, const AbelianGroupSpec& A) {
  if (K.degree != 3 || L.degree != A.m()) throw hypothesis_error("pair needs a cubic K and an |A|-ic L");
  BigInt num = ipow(K.abs_disc, static_cast<unsigned>(A.m())) * ipow(L.abs_disc, 3);
  BigInt defect = 1;
  for (auto& [p, dk] : K.ram) {
    LocalDatum dl = L.at(p);
    int e = compositum_exponent(dk, dl, A);
    if (e) defect *= ipow(BigInt(p), static_cast<unsigned>(e));
  }
  if (num % defect != 0) throw std::logic_error("defect does not divide Disc(K)^m Disc(L)^3");
  return num / defect;
}

enum class CoveragePolicy { strict, pool };

// Fixed pools of S3 cubic fields and C_l fields.
class PairUniverse {
 public:
  PairUniverse(AbelianGroupSpec A, std::vector<FieldRecord> K, std::vector<FieldRecord> L, BigInt k_bound,
               BigInt l_bound)
      : A_(std::move(A)), K_(std::move(K)), L_(std::move(L)), k_bound_(std::move(k_bound)), l_bound_(std::move(l_bound)) {
    T_ = wild_primes(A_);
    std::sort(K_.begin(), K_.end(), [](const FieldRecord& a, const FieldRecord& b) { return a.abs_disc < b.abs_disc; });
    std::sort(L_.begin(), L_.end(), [](const FieldRecord& a, const FieldRecord& b) { return a.abs_disc < b.abs_disc; });
    for (const auto& k : K_) kp_.push_back(profile(k));
    for (const auto& l : L_) lp_.push_back(profile(l));
    std::map<std::uint64_t, bool> seen;
    for (const auto& l : lp_)
      for (auto& [p, t] : l.tame) seen[p] = true;
    for (auto& [p, b] : seen) candidates_.push_back(p);
  }

  // Cubic S3 fields with |disc| <= k_bound against C_l fields with disc <= l_bound.
  static PairUniverse build(int ell, std::uint64_t k_bound, const BigInt& l_bound, unsigned workers = 0) {
    if (ell <= 5) throw unsupported_wild_error("pair oracle needs l > 5 so no prime is wild on both sides");
    AbelianGroupSpec A({ell});
    std::vector<FieldRecord> K;
    CubicEnumOptions opt;
    opt.workers = workers;
    for (auto& f : enumerate_cubic_fields(k_bound, opt))
      if (f.galois == GaloisType::S3) K.push_back(std::move(f));
    return PairUniverse(A, std::move(K), enumerate_cl_fields(ell, l_bound), k_bound, l_bound);
  }

  const AbelianGroupSpec& group() const { return A_; }
  const std::vector<FieldRecord>& K() const { return K_; }
  const std::vector<FieldRecord>& L() const { return L_; }
  const std::vector<std::uint64_t>& T() const { return T_; }
  const BigInt& k_bound() const { return k_bound_; }
  const BigInt& l_bound() const { return l_bound_; }
  const std::vector<std::uint64_t>& candidate_primes() const { return candidates_; }
  std::vector<SieveCell> cells() const { return sieve_cells(A_); }

  // Every pair with Disc(KL) <= X has |Disc K|^m <= X and Disc(L)^3 <= X.
  bool covers(const BigInt& X) const {
    if (X < 1) return true;
    return iroot(X, static_cast<unsigned>(A_.m())) <= k_bound_ && iroot(X, 3) <= l_bound_;
  }

  BigInt max_covered() const {
    BigInt a = ipow(k_bound_ + 1, static_cast<unsigned>(A_.m())) - 1;
    BigInt b = ipow(l_bound_ + 1, 3) - 1;
    return a < b ? a : b;
  }

  // Wild-block values seen in the pools at each p in T.
  std::map<std::uint64_t, std::vector<LocalDatum>> sigma_values() const { return values(kp_); }
  std::map<std::uint64_t, std::vector<LocalDatum>> lambda_values() const { return values(lp_); }

  // B(rho^alpha, Y); alpha defaults to 1 on every cell.
  BigInt count(const LocalConditionRho& rho, const BigInt& Y, const std::map<SieveCell, bool>& alpha = {}) const {
    bool exclusive = false;
    for (auto& [c, a] : alpha)
      if (!a) exclusive = true;
    std::vector<std::uint64_t> ks;
    std::vector<std::size_t> kidx;
    for (std::size_t i = 0; i < kp_.size(); ++i)
      if (k_matches(kp_[i], rho)) {
        ks.push_back(kp_[i].absd);
        kidx.push_back(i);
      }
    if (ks.empty()) return 0;
    BigInt n = 0;
    const unsigned m = static_cast<unsigned>(A_.m());
    for (std::size_t j = 0; j < lp_.size(); ++j) {
      const auto& l = lp_[j];
      if (!l_matches(l, rho)) continue;
      if (l.disc3 > Y) break;
      BigInt thr = iroot(Y / l.disc3, m);
      std::uint64_t t = thr > BigInt(std::numeric_limits<std::uint64_t>::max())
                            ? std::numeric_limits<std::uint64_t>::max()
                            : thr.convert_to<std::uint64_t>();
      std::size_t upto = static_cast<std::size_t>(std::upper_bound(ks.begin(), ks.end(), t) - ks.begin());
      if (!exclusive) {
        n += upto;
        continue;
      }
      for (std::size_t r = 0; r < upto; ++r)
        if (exclusive_ok(kp_[kidx[r]], l, rho, alpha)) ++n;
    }
    return n;
  }

  // Whether any pool pair satisfies the conditions of rho at all.
  bool feasible(const LocalConditionRho& rho) const {
    bool k = false, l = false;
    for (const auto& x : kp_)
      if (k_matches(x, rho)) { k = true; break; }
    if (!k) return false;
    for (const auto& x : lp_)
      if (l_matches(x, rho)) { l = true; break; }
    return l;
  }

  // Exact simultaneous-ramification profile of a pair.
  LocalConditionRho profile_of(std::size_t ki, std::size_t lj) const {
    LocalConditionRho r;
    for (std::size_t t = 0; t < T_.size(); ++t) r.wild[T_[t]] = {kp_[ki].t[t], lp_[lj].t[t]};
    for (auto& [p, type] : kp_[ki].tame)
      if (std::binary_search(lp_[lj].tame_p.begin(), lp_[lj].tame_p.end(), p)) {
        auto& v = r.q[SieveCell{type, lp_[lj].order}];
        v = (v == 0 ? 1 : v) * p;
      }
    return r;
  }

 private:
  struct Profile {
    std::uint64_t absd = 0;  // cubic side
    BigInt disc3;            // abelian side
    int order = 0;
    std::vector<LocalDatum> t;                        // at T
    std::vector<std::pair<std::uint64_t, int>> tame;  // ramified primes outside T with cell index / order
    std::vector<std::uint64_t> tame_p;
  };

  Profile profile(const FieldRecord& f) const {
    Profile p;
    for (std::uint64_t q : T_) p.t.push_back(f.at(q));
    if (f.degree == 3) {
      p.absd = f.abs_disc.convert_to<std::uint64_t>();
      for (auto& [q, d] : f.ram) {
        if (std::find(T_.begin(), T_.end(), q) != T_.end()) continue;
        p.tame.emplace_back(q, d.tame.kind == InertiaKind::s3_partial ? 1 : 2);
      }
    } else {
      p.disc3 = ipow(f.abs_disc, 3);
      p.order = A_.m();
      for (auto& [q, d] : f.ram) {
        if (std::find(T_.begin(), T_.end(), q) != T_.end()) continue;
        p.tame.emplace_back(q, d.tame.order);
        p.order = d.tame.order;
        p.tame_p.push_back(q);
      }
    }
    return p;
  }

  std::map<std::uint64_t, std::vector<LocalDatum>> values(const std::vector<Profile>& ps) const {
    std::map<std::uint64_t, std::vector<LocalDatum>> out;
    for (std::size_t t = 0; t < T_.size(); ++t) {
      std::vector<LocalDatum> v;
      for (const auto& p : ps)
        if (std::find(v.begin(), v.end(), p.t[t]) == v.end()) v.push_back(p.t[t]);
      std::sort(v.begin(), v.end());
      out[T_[t]] = v;
    }
    return out;
  }

  std::size_t t_index(std::uint64_t p) const {
    return static_cast<std::size_t>(std::find(T_.begin(), T_.end(), p) - T_.begin());
  }

  static int tame_type(const Profile& k, std::uint64_t p) {
    auto it = std::lower_bound(k.tame.begin(), k.tame.end(), p,
                               [](const auto& e, std::uint64_t v) { return e.first < v; });
    return (it != k.tame.end() && it->first == p) ? it->second : 0;
  }

  bool k_matches(const Profile& k, const LocalConditionRho& rho) const {
    for (auto& [p, w] : rho.wild) {
      std::size_t t = t_index(p);
      if (t == T_.size() || !(k.t[t] == w.sigma)) return false;
    }
    for (auto& [c, v] : rho.q) {
      if (v == 1) continue;
      for (auto [p, e] : factor_u64(v))
        if (tame_type(k, p) != c.i) return false;
    }
    return true;
  }

  bool l_matches(const Profile& l, const LocalConditionRho& rho) const {
    for (auto& [p, w] : rho.wild) {
      std::size_t t = t_index(p);
      if (t == T_.size() || !(l.t[t] == w.lambda)) return false;
    }
    for (auto& [c, v] : rho.q) {
      if (v == 1) continue;
      for (auto [p, e] : factor_u64(v))
        if (tame_type(l, p) != c.order) return false;
    }
    return true;
  }

  bool exclusive_ok(const Profile& k, const Profile& l, const LocalConditionRho& rho,
                    const std::map<SieveCell, bool>& alpha) const {
    std::map<SieveCell, std::uint64_t> common;
    for (auto& [p, type] : k.tame)
      if (std::binary_search(l.tame_p.begin(), l.tame_p.end(), p)) {
        auto& v = common[SieveCell{type, tame_type(l, p)}];
        v = (v == 0 ? 1 : v) * p;
      }
    for (auto& [c, a] : alpha) {
      if (a) continue;
      auto it = rho.q.find(c);
      std::uint64_t want = it == rho.q.end() ? 1 : it->second;
      auto jt = common.find(c);
      std::uint64_t have = jt == common.end() ? 1 : jt->second;
      if (want != have) return false;
    }
    return true;
  }

  AbelianGroupSpec A_;
  std::vector<FieldRecord> K_, L_;
  BigInt k_bound_, l_bound_;
  std::vector<std::uint64_t> T_;
  std::vector<Profile> kp_, lp_;
  std::vector<std::uint64_t> candidates_;
};

inline BigInt B_count(const LocalConditionRho& rho, const std::map<SieveCell, bool>& alpha, const BigInt& Y,
                      const PairUniverse& U) {
  return U.count(rho, Y, alpha);
}

inline std::map<SieveCell, bool> all_exclusive(const PairUniverse& U) {
  std::map<SieveCell, bool> a;
  for (auto c : U.cells()) a[c] = false;
  return a;
}

// beta(cell) = m ind(a_i) + 3 ind(b_j): exponent of p in Disc(K)^m Disc(L)^3 from a cell prime.
inline int cell_beta(const SieveCell& c, const AbelianGroupSpec& A) {
  return A.m() * c.i + 3 * index(TameInertia::abelian(c.order, A.m()).cycle_type());
}

namespace detail {

// Walk all extensions of rho by candidate primes (ascending) assigned to cells, calling visit on each.
// Branches stop when the q^beta product exceeds Y or when no pool pair can satisfy them.
inline void extend_rho(const LocalConditionRho& base, const BigInt& Y, const PairUniverse& U,
                       const std::function<void(const LocalConditionRho&, int)>& visit,
                       const std::function<BigInt(const LocalConditionRho&)>& scale) {
  const auto cells = U.cells();
  const auto& cand = U.candidate_primes();
  std::uint64_t used = base.support();
  LocalConditionRho cur = base;
  auto weight = [&](const LocalConditionRho& r) {
    BigInt w = 1;
    for (auto& [c, v] : r.q) w *= ipow(BigInt(v), static_cast<unsigned>(cell_beta(c, U.group())));
    return w;
  };
  auto rec = [&](auto&& self, std::size_t start, int added) -> void {
    visit(cur, added);
    for (std::size_t i = start; i < cand.size(); ++i) {
      std::uint64_t p = cand[i];
      if (used % p == 0) continue;
      for (const auto& c : cells) {
        auto& slot = cur.q[c];
        std::uint64_t old = slot;
        slot = (old == 0 ? 1 : old) * p;
        if (weight(cur) <= Y * scale(cur) && U.feasible(cur)) self(self, i + 1, added + 1);
        if (old == 0) cur.q.erase(c); else slot = old;
      }
    }
  };
  rec(rec, 0, 0);
}

}  // namespace detail

// B(rho^0, Y) as the Moebius sum of B((rho eta)^1, Y).
inline BigInt inclusion_exclusion(const LocalConditionRho& rho, const BigInt& Y, const PairUniverse& U) {
  BigInt total = 0;
  if (!U.feasible(rho)) return 0;
  detail::extend_rho(
      rho, Y, U,
      [&](const LocalConditionRho& r, int added) {
        BigInt b = U.count(r, Y);
        if (added % 2) total -= b; else total += b;
      },
      [](const LocalConditionRho&) { return BigInt(1); });
  return total;
}

struct RhoTerm {
  LocalConditionRho rho;
  BigInt L;
  BigInt count;
};

struct Assembly {
  BigInt X;
  BigInt G;
  std::vector<RhoTerm> terms;  // nonzero only
};

// G(X) = sum over rho of B(rho^0, X L_rho).
inline Assembly assemble_G(const BigInt& X, const PairUniverse& U, CoveragePolicy policy = CoveragePolicy::strict) {
  if (policy == CoveragePolicy::strict && !U.covers(X))
    throw bound_error("pools do not cover X = " + X.str());
  Assembly out;
  out.X = X;
  if (X < 1) return out;
  const auto& T = U.T();
  auto sig = U.sigma_values(), lam = U.lambda_values();
  std::vector<LocalConditionRho> blocks(1);
  for (std::uint64_t p : T) {
    std::vector<LocalConditionRho> next;
    for (const auto& b : blocks)
      for (const auto& s : sig[p])
        for (const auto& l : lam[p]) {
          LocalConditionRho r = b;
          r.wild[p] = {s, l};
          next.push_back(r);
        }
    blocks = std::move(next);
  }
  for (const auto& w : blocks) {
    if (!U.feasible(w)) continue;
    BigInt wl = L_rho(w, U.group());
    std::vector<LocalConditionRho> rhos;
    detail::extend_rho(
        w, X, U, [&](const LocalConditionRho& r, int) { rhos.push_back(r); },
        [&](const LocalConditionRho& r) { return L_rho(r, U.group()); });
    (void)wl;
    for (const auto& r : rhos) {
      BigInt L = L_rho(r, U.group());
      BigInt c = inclusion_exclusion(r, X * L, U);
      if (c != 0) {
        out.G += c;
        out.terms.push_back({r, L, c});
      }
    }
  }
  return out;
}

// Pairwise count with individually computed Disc(KL).
inline BigInt direct_pair_count(const BigInt& X, const PairUniverse& U, CoveragePolicy policy = CoveragePolicy::strict,
                                unsigned workers = 1) {
  if (policy == CoveragePolicy::strict && !U.covers(X))
    throw bound_error("pools do not cover X = " + X.str());
  if (X < 1) return 0;
  const unsigned m = static_cast<unsigned>(U.group().m());
  const auto& K = U.K();
  const auto& L = U.L();
  BigInt kcap = iroot(X, m);  // Disc(KL) >= |Disc K|^m
  workers = std::max(1u, workers);
  std::vector<BigInt> part(workers);
  auto job = [&](unsigned w) {
    for (std::size_t i = w; i < K.size(); i += workers) {
      if (K[i].abs_disc > kcap) break;
      for (const auto& l : L) {
        if (ipow(l.abs_disc, 3) > X) break;
        if (pair_discriminant(K[i], l, U.group()) <= X) ++part[w];
      }
    }
  };
  if (workers == 1) job(0);
  else {
    std::vector<std::thread> ts;
    for (unsigned w = 0; w < workers; ++w) ts.emplace_back(job, w);
    for (auto& t : ts) t.join();
  }
  BigInt n = 0;
  for (auto& p : part) n += p;
  return n;
}

// Smallest and largest Disc(KL) over the pools.
inline std::pair<BigInt, BigInt> pair_disc_range(const PairUniverse& U) {
  BigInt lo = -1, hi = 0;
  for (const auto& k : U.K())
    for (const auto& l : U.L()) {
      BigInt d = pair_discriminant(k, l, U.group());
      if (lo < 0 || d < lo) lo = d;
      if (d > hi) hi = d;
    }
  return {lo < 0 ? BigInt(0) : lo, hi};
}

// Prediction-mode B(rho^1, Y) from the cubic densities and g_Lambda; tame cells only.
inline long double predict_B1(const LocalConditionRho& rho, long double logY, int ell, std::uint64_t prime_bound = 200000) {
  if (!rho.wild.empty()) throw unsupported_wild_error("prediction mode has no wild local densities");
  const int m = ell;
  long double As = 1, Bs = 1;
  AbelianCondition cond;
  for (auto& [c, v] : rho.q) {
    if (v == 1) continue;
    for (auto [p, e] : factor_u64(v)) {
      RamType t = c.i == 1 ? RamType::partial : RamType::total;
      As *= local_density(p, t, Term::main);
      Bs *= local_density(p, t, Term::secondary);
      cond.forced.insert(p);
    }
  }
  long double g1 = g_lambda_value(ell, Rational(3, m), cond, prime_bound).value;
  long double g2 = g_lambda_value(ell, Rational(5, 2 * m), cond, prime_bound).value;
  return const_A() * As * g1 * std::exp(logY / m) + const_B() * Bs * g2 * std::exp(logY * 5 / (6 * m));
}

}  // namespace s3a

#endif
