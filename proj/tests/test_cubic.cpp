#include <gtest/gtest.h>

#include <map>

#include "oracles.hpp"
#include "s3a/cubic_enum.hpp"

using namespace s3a;

namespace {

CubicEnumOptions one_worker() {
  CubicEnumOptions o;
  o.workers = 1;
  return o;
}

std::map<std::int64_t, oracle::CubicCount> tally(const std::vector<CubicField>& fs) {
  std::map<std::int64_t, oracle::CubicCount> out;
  for (const auto& f : fs) {
    if (f.cyclic) ++out[f.disc].c3;
    else ++out[f.disc].s3;
  }
  return out;
}

}  // namespace

TEST(CubicEnum, SmallDiscriminants) {
  auto fs = enumerate_cubic_raw(100, one_worker());
  std::vector<std::int64_t> discs;
  for (const auto& f : fs) discs.push_back(f.disc);
  EXPECT_EQ(discs, (std::vector<std::int64_t>{-23, -31, -44, 49, -59, -76, 81, -83, -87}));
  for (const auto& f : fs) EXPECT_EQ(f.cyclic, f.disc == 49 || f.disc == 81);
}

TEST(CubicEnum, CountsToOneThousand) {
  auto t = CubicTable::build(1000, one_worker());
  int pos = 0, neg = 0, cyc = 0;
  for (const auto& f : t.fields()) {
    if (f.cyclic) ++cyc;
    else if (f.disc > 0) ++pos;
    else ++neg;
  }
  EXPECT_EQ(pos, 22);
  EXPECT_EQ(neg, 127);
  EXPECT_EQ(cyc, 5);
  EXPECT_EQ(t.count(1000), 149u);
  EXPECT_EQ(t.count(1000, false), 154u);
}

TEST(CubicEnum, MatchesExhaustiveFormSearch) {
  const std::int64_t X = 1000;
  auto ours = tally(enumerate_cubic_raw(X, one_worker()));
  auto brute = oracle::cubic_fields_exhaustive(X, 6, 12, 24, 48);
  EXPECT_EQ(ours.size(), brute.size());
  for (const auto& [d, c] : brute) {
    auto it = ours.find(d);
    ASSERT_NE(it, ours.end()) << "missing disc " << d;
    EXPECT_EQ(it->second, c) << "disc " << d;
  }
}

TEST(CubicEnum, ExhaustiveSearchBoxIsLargeEnough) {
  const std::int64_t X = 400;
  EXPECT_EQ(oracle::cubic_fields_exhaustive(X, 4, 8, 16, 32), oracle::cubic_fields_exhaustive(X, 7, 14, 28, 56));
}

TEST(CubicEnum, WorkerCountDoesNotChangeResult) {
  CubicEnumOptions a = one_worker(), b;
  b.workers = 4;
  auto x = enumerate_cubic_raw(20000, a), y = enumerate_cubic_raw(20000, b);
  ASSERT_EQ(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    EXPECT_EQ(x[i].disc, y[i].disc);
    EXPECT_EQ(x[i].form, y[i].form);
  }
}

TEST(CubicEnum, FormsHaveTheirDiscriminant) {
  for (const auto& f : enumerate_cubic_raw(5000, one_worker())) {
    EXPECT_EQ(f.form.disc(), f.disc);
    EXPECT_FALSE(oracle::has_rational_root({f.form.a, f.form.b, f.form.c, f.form.d}));
  }
}

TEST(CubicEnum, RefusesHugeBound) {
  CubicEnumOptions o = one_worker();
  o.max_disc_bound = 1000;
  EXPECT_THROW(enumerate_cubic_raw(1001, o), bound_error);
  EXPECT_TRUE(enumerate_cubic_raw(0, o).empty());
}

TEST(CubicEnum, QueriesBeyondTableThrow) {
  auto t = CubicTable::build(500, one_worker());
  EXPECT_THROW(t.count(501), bound_error);
  EXPECT_THROW(t.count_with_conditions(501, 1, 1), bound_error);
}

TEST(CubicRecords, LocalData) {
  auto rs = enumerate_cubic_fields(100, one_worker());
  for (const auto& r : rs) {
    if (r.disc() == -23) {
      EXPECT_EQ(r.at(23), LocalDatum::of(TameInertia::s3_partial()));
      EXPECT_EQ(r.at(5), LocalDatum::unramified());
      EXPECT_FALSE(r.at(2).ramified());
    }
    if (r.disc() == 49) {
      EXPECT_EQ(r.galois, GaloisType::C3);
      EXPECT_EQ(r.at(7), LocalDatum::of(TameInertia::s3_total()));
    }
    if (r.disc() == -44) {
      EXPECT_EQ(r.at(2), LocalDatum::wild_at(2, 2));
    }
  }
}

TEST(CubicConditions, MatchValuationFilter) {
  auto t = CubicTable::build(50000, one_worker());
  for (std::uint64_t q : {1, 5, 7, 35, 11}) {
    for (std::uint64_t r : {1, 13, 5, 7}) {
      if (std::gcd(q, r) != 1) continue;
      std::uint64_t want = 0;
      for (const auto& f : t.fields()) {
        if (f.cyclic) continue;
        std::int64_t ad = std::llabs(f.disc);
        bool ok = true;
        for (std::int64_t p : {5, 7, 11, 13}) {
          int v = 0;
          for (std::int64_t x = ad; x % p == 0; x /= p) ++v;
          if (q % p == 0 && v != 1) ok = false;
          if (r % p == 0 && v != 2) ok = false;
        }
        want += ok;
      }
      EXPECT_EQ(t.count_with_conditions(50000, q, r), want) << q << " " << r;
    }
  }
}

TEST(CubicConditions, RejectBadModuli) {
  auto t = CubicTable::build(1000, one_worker());
  EXPECT_THROW(t.count_with_conditions(1000, 3, 1), hypothesis_error);
  EXPECT_THROW(t.count_with_conditions(1000, 25, 1), hypothesis_error);
  EXPECT_THROW(t.count_with_conditions(1000, 5, 5), hypothesis_error);
  EXPECT_THROW(t.h3_star_sum(1000, 2), hypothesis_error);
}

TEST(ClassGroups, CubicFieldsCountThreeTorsion) {
  const std::int64_t X = 3000;
  auto t = CubicTable::build(X, one_worker());
  std::map<std::int64_t, int> at;
  for (const auto& f : t.fields())
    if (!f.cyclic) ++at[f.disc];
  for (std::int64_t D = -X; D <= X; ++D) {
    if (!oracle::is_fundamental(D)) continue;
    auto h3 = oracle::QuadraticClassGroup(D).three_torsion();
    EXPECT_EQ(1 + 2 * at[D], static_cast<int>(h3)) << "D=" << D;
  }
}

TEST(ClassGroups, KnownClassNumbers) {
  EXPECT_EQ(oracle::QuadraticClassGroup(-23).order(), 3u);
  EXPECT_EQ(oracle::QuadraticClassGroup(-47).order(), 5u);
  EXPECT_EQ(oracle::QuadraticClassGroup(-4).order(), 1u);
  EXPECT_EQ(oracle::QuadraticClassGroup(229).three_torsion(), 3u);
  EXPECT_EQ(oracle::QuadraticClassGroup(5).order(), 1u);
}

TEST(ClassGroups, StarSumMatchesOracle) {
  const std::uint64_t X = 2000;
  auto t = CubicTable::build(X, one_worker());
  for (std::uint64_t q : {1, 5, 7, 11}) {
    std::uint64_t want = 0;
    for (std::int64_t D = -static_cast<std::int64_t>(X); D <= static_cast<std::int64_t>(X); ++D)
      if (oracle::is_fundamental(D) && std::llabs(D) % q == 0) want += oracle::QuadraticClassGroup(D).three_torsion();
    EXPECT_EQ(t.h3_star_sum(X, q), want) << "q=" << q;
  }
}
