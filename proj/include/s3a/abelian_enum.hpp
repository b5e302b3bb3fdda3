#ifndef S3A_ABELIAN_ENUM_HPP
#define S3A_ABELIAN_ENUM_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "arith.hpp"
#include "core.hpp"
#include "field_record.hpp"

namespace s3a {

// Homomorphism weight of the conductor-l^2 part: l+1 as in the generating series g(s),
// l-1 for the count of actual characters of conductor l^2.
enum class WildWeight { displayed, arithmetic };

struct ConductorRecord {
  int ell = 0;
  std::uint64_t conductor = 1;
  std::vector<std::uint64_t> tame_primes;
  bool wild = false;  // l^2 | f
  std::uint64_t num_fields = 0;
  BigInt disc;  // f^(l-1)

  int t() const { return static_cast<int>(tame_primes.size()) + (wild ? 1 : 0); }
};

inline void check_ell(int ell) {
  if (ell < 3 || !is_prime_u64(static_cast<std::uint64_t>(ell))) throw usage_error("ell must be an odd prime");
}

inline std::uint64_t ipow_u64(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Conductors f > 1 with f^(l-1) <= X, ascending.
inline std::vector<ConductorRecord> enumerate_conductors(int ell, const BigInt& X, std::uint64_t fcap = 100000000) {
  check_ell(ell);
  std::vector<ConductorRecord> out;
  if (X < 1) return out;
  BigInt fm = iroot(X, static_cast<unsigned>(ell - 1));
  if (fm > fcap) throw bound_error("conductor bound " + fm.str() + " exceeds " + std::to_string(fcap));
  std::uint64_t fmax = fm.convert_to<std::uint64_t>();
  std::vector<std::uint64_t> ps;
  for (std::uint64_t p : primes_up_to(fmax))
    if (p % static_cast<std::uint64_t>(ell) == 1) ps.push_back(p);
  const std::uint64_t l2 = static_cast<std::uint64_t>(ell) * ell;
  ConductorRecord cur;
  cur.ell = ell;
  auto emit = [&](const ConductorRecord& r) {
    if (r.conductor == 1) return;
    ConductorRecord c = r;
    c.num_fields = ipow_u64(static_cast<std::uint64_t>(ell - 1), c.t() - 1);
    c.disc = ipow(BigInt(c.conductor), static_cast<unsigned>(ell - 1));
    out.push_back(std::move(c));
  };
  auto rec = [&](auto&& self, std::size_t start) -> void {
    emit(cur);
    for (std::size_t i = start; i < ps.size(); ++i) {
      if (ps[i] > fmax / cur.conductor) break;
      cur.conductor *= ps[i];
      cur.tame_primes.push_back(ps[i]);
      self(self, i + 1);
      cur.tame_primes.pop_back();
      cur.conductor /= ps[i];
    }
  };
  rec(rec, 0);
  if (l2 <= fmax) {
    cur = ConductorRecord{};
    cur.ell = ell;
    cur.conductor = l2;
    cur.wild = true;
    rec(rec, 0);
  }
  std::sort(out.begin(), out.end(),
            [](const ConductorRecord& a, const ConductorRecord& b) { return a.conductor < b.conductor; });
  return out;
}

inline FieldRecord make_record(const ConductorRecord& c, std::uint64_t idx) {
  FieldRecord r;
  r.abs_disc = c.disc;
  r.sign = 1;
  r.galois = GaloisType::Cl;
  r.degree = c.ell;
  r.conductor = c.conductor;
  r.ell = c.ell;
  r.index_in_conductor = idx;
  for (std::uint64_t p : c.tame_primes) r.ram.emplace_back(p, LocalDatum::of(TameInertia::abelian(c.ell, c.ell)));
  if (c.wild) r.ram.emplace_back(c.ell, LocalDatum::wild_at(c.ell, 2 * (c.ell - 1)));
  std::sort(r.ram.begin(), r.ram.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return r;
}

inline std::vector<FieldRecord> enumerate_cl_fields(int ell, const BigInt& X) {
  std::vector<FieldRecord> out;
  for (const auto& c : enumerate_conductors(ell, X))
    for (std::uint64_t k = 0; k < c.num_fields; ++k) out.push_back(make_record(c, k));
  return out;
}

struct DirichletCoeffs {
  std::vector<std::pair<BigInt, BigInt>> terms;  // (n, b_n), n ascending, b_n > 0
  BigInt bound = 1;                              // complete for n <= bound
  Rational abscissa = 0;                         // rightmost pole, 1/a
  bool finite = false;                           // no terms beyond bound at all

  BigInt at(const BigInt& n) const {
    auto it = std::lower_bound(terms.begin(), terms.end(), n,
                               [](const auto& t, const BigInt& v) { return t.first < v; });
    return (it != terms.end() && it->first == n) ? it->second : BigInt(0);
  }
};

inline BigInt wild_weight(int ell, WildWeight w) { return w == WildWeight::displayed ? ell + 1 : ell - 1; }

inline DirichletCoeffs g_coefficients(int ell, const BigInt& B, WildWeight w = WildWeight::displayed) {
  if (B < 1) throw usage_error("coefficient bound must be at least 1");
  DirichletCoeffs g;
  g.bound = B;
  g.abscissa = Rational(1, ell - 1);
  g.terms.emplace_back(1, 1);
  for (const auto& c : enumerate_conductors(ell, B)) {
    BigInt b = ipow(BigInt(ell - 1), static_cast<unsigned>(c.tame_primes.size()));
    if (c.wild) b *= wild_weight(ell, w);
    g.terms.emplace_back(c.disc, b);
  }
  std::sort(g.terms.begin(), g.terms.end());
  return g;
}

inline std::uint64_t count_with_divisibility(int ell, const BigInt& X, const BigInt& q) {
  if (q < 1) throw usage_error("q must be positive");
  std::uint64_t n = 0;
  if (q > X) return 0;
  for (const auto& c : enumerate_conductors(ell, X))
    if (c.disc % q == 0) n += c.num_fields;
  return n;
}

}  // namespace s3a

#endif
