// Independent reference computations used only by the tests.
#ifndef S3A_TESTS_ORACLES_HPP
#define S3A_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using i64 = std::int64_t;
using i128 = __int128;
using Big = boost::multiprecision::cpp_int;

// ---- frozen high-precision constants (35 digits, computed offline with mpmath)

inline const char* kZeta3 = "1.2020569031595942853997381615114499907649862923405";
inline const char* kZeta5_3 = "2.1235229688575834915873725889712295";
inline const char* kZeta1_3 = "-0.97336024835078271546888686244789657";
inline const char* kGamma2_3 = "1.3541179394264004169452880281545138";
inline const char* kA = "0.27730245752690248956104209294051024";
inline const char* kB = "-0.40348363666394679863364025671534377";
inline const char* kZeta5_2 = "1.3414872572509171797567696933486121";
inline const char* kZeta2 = "1.6449340668482264364724151666460252";

// ---- small primes

inline bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<i64> primes_after(i64 x, int count) {
  std::vector<i64> out;
  for (i64 p = x + 1; static_cast<int>(out.size()) < count; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

inline std::vector<i64> divisors(i64 n) {
  n = std::llabs(n);
  std::vector<i64> out;
  for (i64 d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}

// ---- cubic fields by exhaustive search over a box of binary cubic forms

struct Form {
  i64 a, b, c, d;
  i128 disc() const {
    i128 A = a, B = b, C = c, D = d;
    return B * B * C * C - 4 * A * C * C * C - 4 * B * B * B * D - 27 * A * A * D * D + 18 * A * B * C * D;
  }
  i128 at(i128 x, i128 y) const { return a * x * x * x + b * x * x * y + c * x * y * y + d * y * y * y; }
};

// F has a root p/q in lowest terms, q | a and p | d.
inline bool has_rational_root(const Form& f) {
  if (f.a == 0 || f.d == 0) return true;
  for (i64 q : divisors(f.a))
    for (i64 p : divisors(f.d))
      for (i64 s : {1, -1})
        if (f.at(s * p, q) == 0) return true;
  return false;
}

inline i64 mulmod(i64 a, i64 b, i64 p) { return static_cast<i64>(static_cast<i128>(a) * b % p); }

inline i64 powmod(i64 a, i64 e, i64 p) {
  i64 r = 1;
  a %= p;
  if (a < 0) a += p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

// Number of roots of F in P^1(F_p), p not dividing the disc or a.
inline int roots_mod_p(const Form& f, i64 p) {
  auto md = [p](i64 v) { v %= p; return v < 0 ? v + p : v; };
  i64 inv = powmod(md(f.a), p - 2, p);
  // monic x^3 + c2 x^2 + c1 x + c0
  i64 c2 = mulmod(md(f.b), inv, p), c1 = mulmod(md(f.c), inv, p), c0 = mulmod(md(f.d), inv, p);
  using P2 = std::array<i64, 3>;  // r0 + r1 x + r2 x^2
  auto mul = [&](const P2& u, const P2& v) {
    i64 t[5] = {0, 0, 0, 0, 0};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) t[i + j] = (t[i + j] + mulmod(u[i], v[j], p)) % p;
    for (int k = 4; k >= 3; --k) {
      i64 h = t[k];
      t[k] = 0;
      t[k - 1] = md(t[k - 1] - mulmod(h, c2, p));
      t[k - 2] = md(t[k - 2] - mulmod(h, c1, p));
      t[k - 3] = md(t[k - 3] - mulmod(h, c0, p));
    }
    return P2{t[0], t[1], t[2]};
  };
  P2 r{1, 0, 0}, x{0, 1, 0};
  for (i64 e = p; e; e >>= 1) {
    if (e & 1) r = mul(r, x);
    x = mul(x, x);
  }
  r[1] = md(r[1] - 1);  // x^p - x mod f
  // gcd degree of f with r
  std::vector<i64> A{c0, c1, c2, 1}, B{r[0], r[1], r[2]};
  auto trim = [](std::vector<i64>& v) { while (!v.empty() && v.back() == 0) v.pop_back(); };
  trim(B);
  while (!B.empty()) {
    i64 binv = powmod(B.back(), p - 2, p);
    while (A.size() >= B.size() && !A.empty()) {
      i64 q = mulmod(A.back(), binv, p);
      std::size_t s = A.size() - B.size();
      for (std::size_t i = 0; i < B.size(); ++i) A[s + i] = md(A[s + i] - mulmod(q, B[i], p));
      trim(A);
    }
    std::swap(A, B);
  }
  return static_cast<int>(A.size()) - 1;
}

struct CubicCount {
  int s3 = 0, c3 = 0;
  bool operator==(const CubicCount&) const = default;
};

inline bool is_square(i64 n) {
  if (n < 0) return false;
  i64 r = static_cast<i64>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n;
}

// disc -> counts of cubic fields with that disc, |disc| <= X.
// Forms are grouped by splitting pattern at primes beyond X; a field's disc is the smallest in its group.
inline std::map<i64, CubicCount> cubic_fields_exhaustive(i64 X, i64 amax, i64 bmax, i64 cmax, i64 dmax, int nprimes = 60) {
  auto ps = primes_after(std::max<i64>(X, 100), nprimes);
  std::map<std::vector<int>, i64> group_min;  // signature -> smallest |disc| (signed)
  for (i64 a = 1; a <= amax; ++a)
    for (i64 b = -bmax; b <= bmax; ++b)
      for (i64 c = -cmax; c <= cmax; ++c)
        for (i64 d = -dmax; d <= dmax; ++d) {
          if (d == 0) continue;
          Form f{a, b, c, d};
          i128 D = f.disc();
          if (D == 0 || D > X || D < -X) continue;
          if (has_rational_root(f)) continue;
          std::vector<int> sig{D > 0 ? 1 : -1};
          for (i64 p : ps) sig.push_back(roots_mod_p(f, p));
          i64 Dv = static_cast<i64>(D);
          auto it = group_min.find(sig);
          if (it == group_min.end() || std::llabs(Dv) < std::llabs(it->second)) group_min[sig] = Dv;
        }
  std::map<i64, CubicCount> out;
  for (auto& [sig, D] : group_min) {
    if (is_square(D)) ++out[D].c3;
    else ++out[D].s3;
  }
  return out;
}

// ---- 3-torsion of quadratic class groups via binary quadratic forms

struct QForm {
  i64 a, b, c;
  bool operator<(const QForm& o) const { return std::tie(a, b, c) < std::tie(o.a, o.b, o.c); }
  bool operator==(const QForm& o) const { return a == o.a && b == o.b && c == o.c; }
};

inline i64 fdiv(i64 a, i64 b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }

inline i64 isqrt(i64 n) {
  i64 r = static_cast<i64>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

class QuadraticClassGroup {
 public:
  explicit QuadraticClassGroup(i64 D) : D_(D) {
    if (D < 0) {
      for (i64 a = 1; 3 * a * a <= -D; ++a)
        for (i64 b = -a + 1; b <= a; ++b) {
          if ((b * b - D) % (4 * a)) continue;
          i64 c = (b * b - D) / (4 * a);
          if (c < a || (c == a && b < 0)) continue;
          if (std::gcd(std::gcd(a, std::llabs(b)), c) != 1) continue;
          classes_.push_back({a, b, c});
        }
    } else {
      // reduced indefinite forms: 0 < b < sqrt D, sqrt D - b < 2|a| < sqrt D + b
      i64 s = isqrt(D);
      std::vector<QForm> red;
      for (i64 b = 1; b <= s; ++b) {
        if (b * b >= D || (b * b - D) % 4) continue;
        i64 n = (b * b - D) / 4;  // a c
        for (i64 a = 1; a <= std::llabs(n); ++a) {
          if (n % a) continue;
          for (i64 sa : {a, -a}) {
            i64 c = n / sa;
            if (!reduced({sa, b, c})) continue;
            if (std::gcd(std::gcd(a, b), std::llabs(c)) != 1) continue;
            red.push_back({sa, b, c});
          }
        }
      }
      std::sort(red.begin(), red.end());
      for (const auto& f : red) {
        if (cycle_of_.count(f)) continue;
        int id = static_cast<int>(classes_.size());
        classes_.push_back(f);
        QForm g = f;
        do {
          cycle_of_[g] = id;
          g = rho(g);
        } while (!(g == f) && !cycle_of_.count(g));
      }
    }
  }

  std::size_t order() const { return classes_.size(); }

  // number of classes x with x^3 = 1
  std::size_t three_torsion() const {
    QForm e = canonical(principal());
    std::size_t n = 0;
    for (const auto& f : classes_) {
      QForm g = compose(canonical(compose(f, f)), f);
      if (canonical(g) == e) ++n;
    }
    return n;
  }

 private:
  bool reduced(const QForm& f) const {
    long double s = std::sqrt(static_cast<long double>(D_));
    long double a2 = 2.0L * std::llabs(f.a);
    return f.b > 0 && f.b < s && s - f.b < a2 && a2 < s + f.b;
  }

  QForm rho(const QForm& f) const {
    i64 c = f.c, ac = std::llabs(c);
    long double s = std::sqrt(static_cast<long double>(D_));
    // r = -b mod 2|c| in (sqrt D - 2|c|, sqrt D) or (-|c|, |c|]
    i64 r = -f.b;
    i64 m = 2 * ac;
    if (ac < s) {
      i64 lo = static_cast<i64>(std::floor(s)) - m;  // r > sqrt D - 2|c|
      r = lo + (((r - lo) % m) + m) % m;
      while (r <= s - m) r += m;
      while (r >= s) r -= m;
    } else {
      r = ((r % m) + m) % m;
      if (r > ac) r -= m;
    }
    return {c, r, (r * r - D_) / (4 * c)};
  }

  QForm reduce_definite(QForm f) const {
    for (;;) {
      if (f.a > f.c) f = {f.c, -f.b, f.a};
      else if (f.b > f.a || f.b <= -f.a) {
        i64 t = fdiv(f.a - f.b, 2 * f.a);
        i64 nb = f.b + 2 * f.a * t;
        f = {f.a, nb, (nb * nb - D_) / (4 * f.a)};
      } else if (f.a == f.c && f.b < 0) f.b = -f.b;
      else return f;
    }
  }

  QForm canonical(const QForm& f) const {
    if (D_ < 0) return reduce_definite(f);
    QForm g = f;
    for (int guard = 0; !reduced(g); ++guard) {
      g = rho(g);
      if (guard > 10000) throw std::runtime_error("indefinite reduction did not terminate");
    }
    return classes_[cycle_of_.at(g)];
  }

  QForm principal() const {
    i64 b = D_ & 1;
    return {1, b, (b * b - D_) / 4};
  }

  static i64 egcd(i64 a, i64 b, i64& x, i64& y) {
    if (b == 0) {
      x = a >= 0 ? 1 : -1;
      y = 0;
      return std::llabs(a);
    }
    i64 x1, y1;
    i64 g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
  }

  // equivalent form whose first coefficient is prime to n
  QForm prime_to(const QForm& f, i64 n) const {
    // small (x, y) first keeps the coefficients small
    for (i64 k = 1; k < 200; ++k)
      for (i64 x = 0; x <= k; ++x)
        for (i64 y = -k; y <= k; ++y) {
          if (std::max<i64>(x, std::llabs(y)) != k || std::gcd(x, std::llabs(y)) != 1) continue;
          i64 v = f.a * x * x + f.b * x * y + f.c * y * y;
          if (v == 0 || std::gcd(std::llabs(v), std::llabs(n)) != 1) continue;
          i64 z, w;
          egcd(x, y, w, z);  // x w + y z' = 1 with z = -z'
          z = -z;
          // [[x z],[y w]] with x w - y z = 1
          i64 nb = 2 * f.a * x * z + f.b * (x * w + y * z) + 2 * f.c * y * w;
          return {v, nb, (nb * nb - D_) / (4 * v)};
        }
    throw std::runtime_error("no coprime value found");
  }

  // Dirichlet composition
  QForm compose(const QForm& f1, QForm f2) const {
    f2 = prime_to(f2, f1.a);
    i64 a1 = f1.a, a2 = f2.a;
    // B = b1 + 2 a1 t, a1 t = (b2 - b1)/2 mod a2
    i64 h = (f2.b - f1.b) / 2, x, y;
    egcd(a1, a2, x, y);
    i64 m = std::llabs(a2);
    i64 t = static_cast<i64>((static_cast<i128>(x) * h % m + m) % m);
    i64 B = f1.b + 2 * a1 * t;
    i64 A = a1 * a2;
    B %= 2 * std::llabs(A);
    return {A, B, (B * B - D_) / (4 * A)};
  }

  i64 D_;
  std::vector<QForm> classes_;
  std::map<QForm, int> cycle_of_;
};

inline bool is_fundamental(i64 D) {
  auto sqfree = [](i64 n) {
    n = std::llabs(n);
    for (i64 p = 2; p * p <= n; ++p)
      if (n % (p * p) == 0) return false;
    return true;
  };
  if (D == 0 || D == 1) return false;
  i64 r = ((D % 4) + 4) % 4;
  if (r == 1) return sqfree(D);
  if (r != 0) return false;
  i64 k = ((D / 4) % 4 + 4) % 4;
  return (k == 2 || k == 3) && sqfree(D / 4);
}

// ---- permutation orbits

inline int orbits(int n, const std::vector<std::vector<int>>& gens) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : gens)
    for (int i = 0; i < n; ++i) parent[find(i)] = find(g[i]);
  int k = 0;
  for (int i = 0; i < n; ++i) k += find(i) == i;
  return k;
}

// permutation of {0..n-1} with the given cycle lengths
inline std::vector<int> perm_with_cycles(const std::vector<int>& cycles) {
  int n = std::accumulate(cycles.begin(), cycles.end(), 0);
  std::vector<int> p(n);
  int s = 0;
  for (int c : cycles) {
    for (int i = 0; i < c; ++i) p[s + i] = s + (i + 1) % c;
    s += c;
  }
  return p;
}

// (g, h) acting on pairs (i, j) of {0..n-1} x {0..m-1}
inline std::vector<int> product_perm(const std::vector<int>& g, const std::vector<int>& h) {
  int n = static_cast<int>(g.size()), m = static_cast<int>(h.size());
  std::vector<int> p(n * m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) p[i * m + j] = g[i] * m + h[j];
  return p;
}

inline std::vector<int> identity(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// Tame: Disc(K)^m Disc(L)^n / Disc(KL) exponent with cyclic inertia <(g,h)>.
inline int tame_defect(const std::vector<int>& g_cycles, const std::vector<int>& h_cycles) {
  auto g = perm_with_cycles(g_cycles), h = perm_with_cycles(h_cycles);
  int n = static_cast<int>(g.size()), m = static_cast<int>(h.size());
  int vK = n - orbits(n, {g}), vL = m - orbits(m, {h});
  int vKL = n * m - orbits(n * m, {product_perm(g, h)});
  return m * vK + n * vL - vKL;
}

// Cubic K tame at l with inertia g, L cyclic of degree l with conductor l^2.
// Lower filtration of the compositum: G_0 = <g> x <w>, G_1 = ... = G_e = <w>, then trivial,
// with e = |<g>| (upper break 1 for conductor exponent 2).
inline int wild_defect(const std::vector<int>& g_cycles, int ell) {
  auto g = perm_with_cycles(g_cycles);
  auto w = perm_with_cycles({ell});
  int n = static_cast<int>(g.size());
  int e = 1;
  for (int c : g_cycles) e = std::lcm(e, c);
  int N = n * ell;
  auto G0 = std::vector<std::vector<int>>{product_perm(g, identity(ell)), product_perm(identity(n), w)};
  auto G1 = std::vector<std::vector<int>>{product_perm(identity(n), w)};
  // sum_i |G_i|/|G_0| (N - orbits(G_i)); i = 0 once, i = 1..e with weight 1/e each
  int vKL = (N - orbits(N, G0)) + (N - orbits(N, G1));
  int vK = n - orbits(n, {g});
  // L: G_0 = G_1 = <w>, trivial after: (l - 1) + (l - 1)
  int vL = 2 * (ell - 1);
  return ell * vK + n * vL - vKL;
}

}  // namespace oracle

#endif
