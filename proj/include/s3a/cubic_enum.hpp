#ifndef S3A_CUBIC_ENUM_HPP
#define S3A_CUBIC_ENUM_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <thread>
#include <vector>

#include "arith.hpp"
#include "core.hpp"
#include "cubic_form.hpp"
#include "densities.hpp"
#include "field_record.hpp"

namespace s3a {

struct CubicField {
  BinaryCubicForm form;
  std::int64_t disc = 0;
  bool cyclic = false;
};

struct CubicEnumOptions {
  unsigned workers = 0;                     // 0: hardware concurrency
  std::uint64_t max_disc_bound = 50000000;  // refuse larger X
};

namespace detail {

inline std::int64_t floor_div(i128 n, i128 d) {
  i128 q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
  return static_cast<std::int64_t>(q);
}

inline std::int64_t ceil_div(i128 n, i128 d) { return -floor_div(-n, d); }

inline std::int64_t isqrt(std::int64_t n) {
  if (n <= 0) return 0;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

inline bool hessian_reduced(const BinaryCubicForm& f) {
  auto [P, Q, R] = f.hessian();
  i128 aQ = Q < 0 ? -Q : Q;
  return aQ <= P && P <= R;
}

// Unimodular matrices with entries in {-1,0,1}.
inline const std::vector<std::array<int, 4>>& small_unimodular() {
  static const std::vector<std::array<int, 4>> M = [] {
    std::vector<std::array<int, 4>> out;
    for (int p = -1; p <= 1; ++p)
      for (int q = -1; q <= 1; ++q)
        for (int r = -1; r <= 1; ++r)
          for (int s = -1; s <= 1; ++s)
            if (std::abs(p * s - q * r) == 1) out.push_back({p, q, r, s});
    return out;
  }();
  return M;
}

// Least reduced representative test for positive discriminant.
inline bool canonical_positive(const BinaryCubicForm& f) {
  auto [P, Q, R] = f.hessian();
  i128 aQ = Q < 0 ? -Q : Q;
  if (aQ < P && P < R) return f.b < 0 || (f.b == 0 && f.d < 0);
  for (const auto& g : small_unimodular()) {
    BinaryCubicForm h = f.transform(g[0], g[1], g[2], g[3]);
    if (h.a < 0) h = h.negated();
    if (h.a <= 0 || !hessian_reduced(h)) continue;
    if (h < f) return false;
  }
  return true;
}

inline bool maximal(const BinaryCubicForm& f, std::int64_t D, const PrimeTable& pt) {
  std::uint64_t n = static_cast<std::uint64_t>(D < 0 ? -D : D);
  for (auto [p, e] : pt.factor(n))
    if (e >= 2 && !is_maximal_at(f, static_cast<std::int64_t>(p))) return false;
  return true;
}

inline void accept(const BinaryCubicForm& f, std::int64_t D, const PrimeTable& pt, std::vector<CubicField>& out) {
  if (!is_irreducible(f)) return;
  if (!maximal(f, D, pt)) return;
  out.push_back({f, D, is_square(D)});
}

inline void enumerate_positive(std::int64_t a, std::int64_t X, const PrimeTable& pt, std::vector<CubicField>& out) {
  const std::int64_t Pmax = isqrt(X);
  const long double x4 = std::pow(static_cast<long double>(X), 0.25L);
  const std::int64_t bmax = static_cast<std::int64_t>(1.5L * a + 3 * std::sqrt(2.0L) * x4) + 2;
  for (std::int64_t b = -bmax; b <= bmax; ++b) {
    i128 b2 = static_cast<i128>(b) * b;
    std::int64_t clo = ceil_div(b2 - Pmax, 3 * a), chi = floor_div(b2 - 1, 3 * a);
    for (std::int64_t c = clo; c <= chi; ++c) {
      i128 P = b2 - 3 * static_cast<i128>(a) * c;
      i128 bc = static_cast<i128>(b) * c;
      std::int64_t dlo = ceil_div(bc - P, 9 * a), dhi = floor_div(bc + P, 9 * a);
      for (std::int64_t d = dlo; d <= dhi; ++d) {
        if (d == 0) continue;
        i128 R = static_cast<i128>(c) * c - 3 * static_cast<i128>(b) * d;
        if (R < P) continue;
        BinaryCubicForm f{a, b, c, d};
        i128 D = f.disc();
        if (D <= 0 || D > X) continue;
        if (!canonical_positive(f)) continue;
        accept(f, static_cast<std::int64_t>(D), pt, out);
      }
    }
  }
}

inline void enumerate_negative(std::int64_t a, std::int64_t X, const PrimeTable& pt, std::vector<CubicField>& out) {
  const long double Xl = static_cast<long double>(X);
  const long double al = static_cast<long double>(a);
  const long double t_theta = std::pow(Xl / 3, 0.25L) + al / 2 + std::cbrt(al) * std::pow(Xl / 4, 1.0L / 6);
  const std::int64_t bmax = static_cast<std::int64_t>(t_theta + al) + 2;
  const std::int64_t clo = static_cast<std::int64_t>(std::floor(al - t_theta)) - 2;
  const std::int64_t chi =
      static_cast<std::int64_t>(t_theta + al / 4 + std::pow(Xl / 4, 1.0L / 3) / std::cbrt(al)) + 2;
  const long double a2 = 54.0L * al * al;
  for (std::int64_t b = -bmax; b <= 0; ++b) {
    for (std::int64_t c = clo; c <= chi; ++c) {
      // disc as a quadratic in d: -27 a^2 d^2 + B d + C
      long double B = 18.0L * a * b * c - 4.0L * b * b * b;
      long double C = 1.0L * b * b * c * c - 4.0L * a * c * c * c;
      long double outer = B * B + 108.0L * al * al * (C + Xl);
      if (outer < 0) continue;
      long double so = std::sqrt(outer);
      long double lo = (B - so) / a2, hi = (B + so) / a2;
      long double inner = B * B + 108.0L * al * al * C;
      std::vector<std::pair<std::int64_t, std::int64_t>> ranges;
      if (inner <= 0) {
        ranges.push_back({static_cast<std::int64_t>(std::floor(lo)) - 1, static_cast<std::int64_t>(std::ceil(hi)) + 1});
      } else {
        long double si = std::sqrt(inner);
        long double r1 = (B - si) / a2, r2 = (B + si) / a2;
        ranges.push_back({static_cast<std::int64_t>(std::floor(lo)) - 1, static_cast<std::int64_t>(std::ceil(r1)) + 1});
        ranges.push_back({static_cast<std::int64_t>(std::floor(r2)) - 1, static_cast<std::int64_t>(std::ceil(hi)) + 1});
        if (ranges[1].first <= ranges[0].second) {
          ranges[0].second = ranges[1].second;
          ranges.pop_back();
        }
      }
      for (auto [dlo, dhi] : ranges) {
        for (std::int64_t d = dlo; d <= dhi; ++d) {
          if (d == 0) continue;
          if (b == 0 && d > 0) continue;
          BinaryCubicForm f{a, b, c, d};
          i128 D = f.disc();
          if (D >= 0 || -D > X) continue;
          // real root strictly inside (-b/a - 1, -b/a + 1) and strictly between 0 and -d/a
          if (!(f.eval(-b - a, a) < 0 && f.eval(a - b, a) > 0)) continue;
          if (!((d > 0) == (f.eval(-d, a) < 0))) continue;
          accept(f, static_cast<std::int64_t>(D), pt, out);
        }
      }
    }
  }
}

}  // namespace detail

// All cubic fields with |disc| <= X, sorted by (|disc|, form).
inline std::vector<CubicField> enumerate_cubic_raw(std::uint64_t X, const CubicEnumOptions& opt = {}) {
  std::vector<CubicField> out;
  if (X == 0) return out;
  if (X > opt.max_disc_bound)
    throw bound_error("cubic enumeration limited to |disc| <= " + std::to_string(opt.max_disc_bound));
  const auto Xi = static_cast<std::int64_t>(X);
  auto pt = std::make_shared<PrimeTable>(X);
  const long double Xl = static_cast<long double>(X);
  std::int64_t amax_pos = static_cast<std::int64_t>(std::pow(16 * Xl / 729, 0.25L)) + 1;
  std::int64_t amax_neg = static_cast<std::int64_t>(std::pow(16 * Xl / 27, 0.25L)) + 1;
  std::int64_t amax = std::max(amax_pos, amax_neg);

  unsigned workers = opt.workers ? opt.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(amax));
  std::vector<std::vector<CubicField>> parts(workers);
  auto job = [&](unsigned w) {
    // leading coefficients are dealt round-robin; work per a falls off quickly
    for (std::int64_t a = 1 + w; a <= amax; a += workers) {
      if (729 * std::pow(static_cast<long double>(a), 4) <= 16 * Xl) detail::enumerate_positive(a, Xi, *pt, parts[w]);
      if (27 * std::pow(static_cast<long double>(a), 4) <= 16 * Xl) detail::enumerate_negative(a, Xi, *pt, parts[w]);
    }
  };
  if (workers == 1) {
    job(0);
  } else {
    std::vector<std::thread> ts;
    for (unsigned w = 0; w < workers; ++w) ts.emplace_back(job, w);
    for (auto& t : ts) t.join();
  }
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end(), [](const CubicField& x, const CubicField& y) {
    std::int64_t ax = x.disc < 0 ? -x.disc : x.disc, ay = y.disc < 0 ? -y.disc : y.disc;
    if (ax != ay) return ax < ay;
    return x.form < y.form;
  });
  return out;
}

// p-adic data of a cubic field from its discriminant.
inline FieldRecord make_record(const CubicField& f, const PrimeTable* pt = nullptr) {
  FieldRecord r;
  std::uint64_t n = static_cast<std::uint64_t>(f.disc < 0 ? -f.disc : f.disc);
  r.abs_disc = n;
  r.sign = f.disc < 0 ? -1 : 1;
  r.galois = f.cyclic ? GaloisType::C3 : GaloisType::S3;
  r.degree = 3;
  r.form = {f.form.a, f.form.b, f.form.c, f.form.d};
  Factorization fac = (pt && n <= pt->limit()) ? pt->factor(n) : factor_u64(n);
  for (auto [p, e] : fac) {
    if (p == 2 || p == 3) {
      r.ram.emplace_back(p, LocalDatum::wild_at(p, e));
    } else {
      if (e > 2) throw std::logic_error("tame valuation above 2 in a cubic field discriminant");
      r.ram.emplace_back(p, LocalDatum::of(e == 1 ? TameInertia::s3_partial() : TameInertia::s3_total()));
    }
  }
  return r;
}

inline std::vector<FieldRecord> enumerate_cubic_fields(std::uint64_t X, const CubicEnumOptions& opt = {}) {
  auto raw = enumerate_cubic_raw(X, opt);
  PrimeTable pt(std::max<std::uint64_t>(X, 2));
  std::vector<FieldRecord> out;
  out.reserve(raw.size());
  for (const auto& f : raw) out.push_back(make_record(f, &pt));
  return out;
}

inline LocalDatum classify_ramification(const FieldRecord& f, std::uint64_t p) { return f.at(p); }

// Read-only view over an enumeration for local-condition counts.
class CubicTable {
 public:
  CubicTable() = default;
  CubicTable(std::vector<CubicField> fields, std::uint64_t X) : fields_(std::move(fields)), X_(X) {}

  static CubicTable build(std::uint64_t X, const CubicEnumOptions& opt = {}) {
    return CubicTable(enumerate_cubic_raw(X, opt), X);
  }

  const std::vector<CubicField>& fields() const { return fields_; }
  std::uint64_t bound() const { return X_; }

  void require(std::uint64_t X) const {
    if (X > X_) throw bound_error("query beyond enumerated range " + std::to_string(X_));
  }

  std::uint64_t count(std::uint64_t X, bool s3_only = true) const {
    require(X);
    std::uint64_t n = 0;
    for (const auto& f : fields_) {
      std::uint64_t ad = static_cast<std::uint64_t>(f.disc < 0 ? -f.disc : f.disc);
      if (ad > X) break;
      if (s3_only && f.cyclic) continue;
      ++n;
    }
    return n;
  }

  std::uint64_t count_with_conditions(std::uint64_t X, std::uint64_t q, std::uint64_t r) const {
    require(X);
    check_qr(q, r);
    auto qf = factor_u64(q), rf = factor_u64(r);
    std::uint64_t n = 0;
    for (const auto& f : fields_) {
      std::uint64_t ad = static_cast<std::uint64_t>(f.disc < 0 ? -f.disc : f.disc);
      if (ad > X) break;
      if (f.cyclic) continue;
      bool ok = true;
      for (auto [p, e] : qf)
        if (valuation(ad, p) != 1) { ok = false; break; }
      if (!ok) continue;
      for (auto [p, e] : rf)
        if (valuation(ad, p) != 2) { ok = false; break; }
      if (ok) ++n;
    }
    return n;
  }

  // Sum of h3* over quadratic fields with q | disc and |disc| <= X, via cubic fields of fundamental disc.
  std::uint64_t h3_star_sum(std::uint64_t X, std::uint64_t q) const {
    require(X);
    if (q == 0 || !is_squarefree(q) || q % 2 == 0 || q % 3 == 0)
      throw hypothesis_error("q must be squarefree and prime to 6");
    std::map<std::int64_t, std::uint64_t> cubic_at;
    for (const auto& f : fields_) {
      std::uint64_t ad = static_cast<std::uint64_t>(f.disc < 0 ? -f.disc : f.disc);
      if (ad > X) break;
      if (!f.cyclic) ++cubic_at[f.disc];
    }
    std::vector<bool> sqfree(X + 1, true);
    for (std::uint64_t p = 2; p * p <= X; ++p)
      for (std::uint64_t k = p * p; k <= X; k += p * p) sqfree[k] = false;
    std::uint64_t total = 0;
    for (std::int64_t D = -static_cast<std::int64_t>(X); D <= static_cast<std::int64_t>(X); ++D) {
      if (!is_fundamental_discriminant(D, sqfree)) continue;
      std::uint64_t ad = static_cast<std::uint64_t>(D < 0 ? -D : D);
      if (ad % q != 0) continue;
      auto it = cubic_at.find(D);
      total += 1 + 2 * (it == cubic_at.end() ? 0 : it->second);
    }
    return total;
  }

  static bool is_fundamental_discriminant(std::int64_t D, const std::vector<bool>& sqfree) {
    if (D == 0 || D == 1) return false;
    std::int64_t m = ((D % 4) + 4) % 4;
    std::uint64_t ad = static_cast<std::uint64_t>(D < 0 ? -D : D);
    if (m == 1) return sqfree[ad];
    if (m != 0) return false;
    std::int64_t k = D / 4;
    std::int64_t km = ((k % 4) + 4) % 4;
    return (km == 2 || km == 3) && sqfree[ad / 4];
  }


 private:
  std::vector<CubicField> fields_;
  std::uint64_t X_ = 0;
};

struct UniformityRow {
  std::uint64_t q = 1, r = 1;
  std::uint64_t count = 0;
  long double ratio = 0;  // N q^{1/6} r^2 / X
};

inline std::vector<UniformityRow> uniformity_report(const CubicTable& t, std::uint64_t X,
                                                    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& cells) {
  std::vector<UniformityRow> out;
  for (auto [q, r] : cells) {
    UniformityRow row{q, r, t.count_with_conditions(X, q, r), 0};
    row.ratio = row.count * std::pow(static_cast<long double>(q), 1.0L / 6) * static_cast<long double>(r) * r /
                static_cast<long double>(X);
    out.push_back(row);
  }
  return out;
}

inline std::uint64_t count_with_conditions(std::uint64_t X, std::uint64_t q, std::uint64_t r) {
  return CubicTable::build(X).count_with_conditions(X, q, r);
}

inline std::uint64_t h3_star_sum(std::uint64_t X, std::uint64_t q) { return CubicTable::build(X).h3_star_sum(X, q); }

}  // namespace s3a

#endif
