#ifndef S3A_FIELD_RECORD_HPP
#define S3A_FIELD_RECORD_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "permgroup.hpp"

namespace s3a {

enum class GaloisType { S3, C3, Cl };

inline const char* to_string(GaloisType g) {
  switch (g) {
    case GaloisType::S3: return "S3";
    case GaloisType::C3: return "C3";
    default: return "Cl";
  }
}

// Tame inertia, or a wild prime with its disc exponent (exponent 0 allowed).
struct LocalDatum {
  bool wild = false;
  TameInertia tame;
  std::uint64_t p = 0;
  int exponent = 0;

  static LocalDatum unramified() { return {}; }
  static LocalDatum of(TameInertia t) { return {false, t, 0, 0}; }
  static LocalDatum wild_at(std::uint64_t p, int e) { return {true, {}, p, e}; }

  bool ramified() const { return wild ? exponent > 0 : tame.ramified(); }
  bool operator==(const LocalDatum& o) const {
    if (wild != o.wild) return false;
    return wild ? (p == o.p && exponent == o.exponent) : tame == o.tame;
  }
  bool operator<(const LocalDatum& o) const {
    auto key = [](const LocalDatum& d) {
      return std::array<long long, 5>{d.wild, static_cast<long long>(d.tame.kind), d.tame.order,
                                      static_cast<long long>(d.p), d.exponent};
    };
    return key(*this) < key(o);
  }
};

inline std::string to_string(const LocalDatum& d) {
  if (d.wild) return "wild(" + std::to_string(d.p) + "^" + std::to_string(d.exponent) + ")";
  return to_string(d.tame);
}

struct FieldRecord {
  BigInt abs_disc = 1;
  int sign = 1;
  GaloisType galois = GaloisType::S3;
  int degree = 3;
  std::vector<std::pair<std::uint64_t, LocalDatum>> ram;  // ramified primes, ascending
  std::array<std::int64_t, 4> form{};                     // cubic: a,b,c,d
  std::uint64_t conductor = 0;                            // abelian
  int ell = 0;
  std::uint64_t index_in_conductor = 0;

  BigInt disc() const { return sign < 0 ? BigInt(-abs_disc) : abs_disc; }

  // Local datum at p; cubic fields report wild data at 2 and 3 even when unramified.
  LocalDatum at(std::uint64_t p) const {
    auto it = std::lower_bound(ram.begin(), ram.end(), p,
                               [](const auto& e, std::uint64_t q) { return e.first < q; });
    if (it != ram.end() && it->first == p) return it->second;
    if (degree == 3 && (p == 2 || p == 3)) return LocalDatum::wild_at(p, 0);
    return LocalDatum::unramified();
  }
};

}  // namespace s3a

#endif
