#ifndef S3A_CUBIC_FORM_HPP
#define S3A_CUBIC_FORM_HPP

#include <array>
#include <cmath>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <vector>

#include "core.hpp"

namespace s3a {

using i128 = __int128;

// a x^3 + b x^2 y + c x y^2 + d y^3
struct BinaryCubicForm {
  std::int64_t a = 0, b = 0, c = 0, d = 0;

  auto operator<=>(const BinaryCubicForm&) const = default;

  i128 disc() const {
    i128 A = a, B = b, C = c, D = d;
    return B * B * C * C - 4 * A * C * C * C - 4 * B * B * B * D - 27 * A * A * D * D + 18 * A * B * C * D;
  }

  i128 eval(i128 x, i128 y) const {
    return ((a * x + b * y) * x + c * y * y) * x + d * y * y * y;
  }

  // Hessian covariant (P, Q, R) with disc(H) = -3 disc(F)
  std::array<i128, 3> hessian() const {
    i128 A = a, B = b, C = c, D = d;
    return {B * B - 3 * A * C, B * C - 9 * A * D, C * C - 3 * B * D};
  }

  // F(p x + q y, r x + s y)
  BinaryCubicForm transform(std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s) const {
    BinaryCubicForm g;
    g.a = static_cast<std::int64_t>(eval(p, r));
    g.d = static_cast<std::int64_t>(eval(q, s));
    g.b = 3 * a * p * p * q + b * (p * p * s + 2 * p * q * r) + c * (2 * p * r * s + q * r * r) + 3 * d * r * r * s;
    g.c = 3 * a * p * q * q + b * (2 * p * q * s + q * q * r) + c * (p * s * s + 2 * q * r * s) + 3 * d * r * s * s;
    return g;
  }

  BinaryCubicForm negated() const { return {-a, -b, -c, -d}; }
};

namespace detail {

inline long double horner(const BinaryCubicForm& f, long double x) {
  return ((f.a * x + f.b) * x + f.c) * x + f.d;
}

inline long double polish(const BinaryCubicForm& f, long double x) {
  for (int i = 0; i < 4; ++i) {
    long double fx = horner(f, x);
    long double dx = (3 * f.a * x + 2 * f.b) * x + f.c;
    if (dx == 0) break;
    long double nx = x - fx / dx;
    if (!std::isfinite(nx)) break;
    x = nx;
  }
  return x;
}

// Real roots of f(x, 1), a != 0.
inline std::vector<long double> real_roots(const BinaryCubicForm& f) {
  long double a = f.a, b = f.b / a, c = f.c / a, d = f.d / a;
  long double p = c - b * b / 3, q = 2 * b * b * b / 27 - b * c / 3 + d;
  long double shift = -b / 3;
  std::vector<long double> out;
  long double disc = q * q / 4 + p * p * p / 27;
  if (f.disc() < 0) {
    long double sq = std::sqrt(std::max(disc, 0.0L));
    long double t = std::cbrt(-q / 2 + sq) + std::cbrt(-q / 2 - sq);
    out.push_back(polish(f, t + shift));
  } else {
    long double r = std::sqrt(std::max(-p / 3, 0.0L));
    long double arg = (r == 0) ? 0 : std::clamp(-q / (2 * r * r * r), -1.0L, 1.0L);
    long double th = std::acos(arg);
    const long double pi = 3.141592653589793238462643383279502884L;
    for (int k = 0; k < 3; ++k) out.push_back(polish(f, 2 * r * std::cos((th - 2 * pi * k) / 3) + shift));
  }
  return out;
}

}  // namespace detail

// No root in P^1(Q).
inline bool is_irreducible(const BinaryCubicForm& f) {
  if (f.a == 0 || f.d == 0) return false;
  auto roots = detail::real_roots(f);
  std::int64_t A = std::llabs(f.a);
  for (std::int64_t q = 1; q <= A; ++q) {
    if (A % q != 0) continue;
    for (long double t : roots) {
      long double pf = std::llround(t * q);
      for (std::int64_t p = static_cast<std::int64_t>(pf) - 1; p <= static_cast<std::int64_t>(pf) + 1; ++p)
        if (f.eval(p, q) == 0) return false;
    }
  }
  return true;
}

// The cubic ring of f is maximal at p (assumes p^2 | disc).
inline bool is_maximal_at(const BinaryCubicForm& f, std::int64_t p) {
  auto mod = [p](i128 x) { return static_cast<std::int64_t>(((x % p) + p) % p); };
  if (mod(f.a) == 0 && mod(f.b) == 0 && mod(f.c) == 0 && mod(f.d) == 0) return false;
  i128 p2 = static_cast<i128>(p) * p;
  if (mod(f.a) == 0 && mod(f.b) == 0) return f.a % p2 != 0;
  for (std::int64_t r = 0; r < p; ++r) {
    if (mod(f.eval(r, 1)) != 0) continue;
    i128 der = (3 * static_cast<i128>(f.a) * r + 2 * f.b) * r + f.c;
    if (mod(der) != 0) continue;
    return f.eval(r, 1) % p2 != 0;
  }
  return true;  // no multiple root mod p: p does not divide the index
}

}  // namespace s3a

#endif
