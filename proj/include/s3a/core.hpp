#ifndef S3A_CORE_HPP
#define S3A_CORE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace s3a {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Error kinds map onto CLI exit codes in tools/s3a_cli.cpp.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct usage_error : error { using error::error; };
struct bound_error : error { using error::error; };       // resource limits, pool coverage
struct hypothesis_error : error { using error::error; };
struct divergence_error : error { using error::error; };
struct unsupported_wild_error : error { using error::error; };
struct precision_error : error { using error::error; };
struct not_applicable_error : error { using error::error; };

inline Rational rat(long long n, long long d = 1) { return Rational(n, d); }

inline std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline std::string to_string(const BigInt& n) { return n.str(); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline BigInt ipow(const BigInt& base, unsigned e) {
  return boost::multiprecision::pow(base, e);
}

// floor(x^(1/k)) for x >= 0
inline BigInt iroot(const BigInt& x, unsigned k) {
  if (x < 0) throw std::domain_error("iroot of negative");
  if (x < 2 || k == 1) return x;
  unsigned bits = msb(x) / k + 1;
  BigInt lo = 0, hi = BigInt(1) << (bits + 1);
  while (lo < hi) {
    BigInt mid = (lo + hi + 1) >> 1;
    if (ipow(mid, k) <= x) lo = mid; else hi = mid - 1;
  }
  return lo;
}

inline BigInt parse_bigint(const std::string& s) {
  if (s.empty()) throw usage_error("empty integer");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw usage_error("bad integer: " + s);
  for (std::size_t j = i; j < s.size(); ++j)
    if (s[j] < '0' || s[j] > '9') throw usage_error("bad integer: " + s);
  return BigInt(s);
}

}  // namespace s3a

#endif
