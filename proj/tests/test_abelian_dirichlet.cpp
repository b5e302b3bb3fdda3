#include <gtest/gtest.h>

#include <numeric>

#include "oracles.hpp"
#include "s3a/abelian_enum.hpp"
#include "s3a/dirichlet.hpp"

using namespace s3a;

namespace {

// fields of degree l with conductor f, from primitive characters of order l
std::uint64_t fields_with_conductor(int ell, std::int64_t f) {
  auto chars = [&](std::int64_t p, int k) -> std::int64_t {
    if (k == 0) return 1;
    std::int64_t phi = p - 1;
    for (int i = 1; i < k; ++i) phi *= p;
    return std::gcd<std::int64_t>(ell, phi);
  };
  std::int64_t prim = 1;
  for (std::int64_t p = 2, n = f; n > 1; ++p) {
    if (n % p) continue;
    int k = 0;
    while (n % p == 0) n /= p, ++k;
    prim *= chars(p, k) - chars(p, k - 1);
  }
  return static_cast<std::uint64_t>(prim / (ell - 1));
}

}  // namespace

TEST(Conductors, MatchCharacterCount) {
  for (int ell : {3, 5, 7}) {
    const std::int64_t F = ell == 3 ? 3000 : 2000;
    BigInt X = ipow(BigInt(F), ell - 1);
    std::map<std::uint64_t, std::uint64_t> ours;
    for (const auto& c : enumerate_conductors(ell, X)) ours[c.conductor] = c.num_fields;
    for (std::int64_t f = 2; f <= F; ++f) {
      auto want = fields_with_conductor(ell, f);
      auto it = ours.find(static_cast<std::uint64_t>(f));
      EXPECT_EQ(it == ours.end() ? 0u : it->second, want) << "ell=" << ell << " f=" << f;
    }
  }
}

TEST(Conductors, SmallestFields) {
  auto c5 = enumerate_conductors(5, BigInt(14641));
  ASSERT_EQ(c5.size(), 1u);
  EXPECT_EQ(c5[0].conductor, 11u);
  auto c7 = enumerate_conductors(7, ipow(BigInt(29), 6));
  ASSERT_EQ(c7.size(), 1u);
  EXPECT_EQ(c7[0].conductor, 29u);
  EXPECT_TRUE(enumerate_conductors(7, ipow(BigInt(29), 6) - 1).empty());
  EXPECT_THROW(enumerate_conductors(4, BigInt(100)), usage_error);
}

TEST(Conductors, FieldRecordsCarryLocalData) {
  auto fs = enumerate_cl_fields(5, ipow(BigInt(25), 4));
  bool saw_wild = false;
  for (const auto& f : fs) {
    EXPECT_EQ(f.abs_disc, ipow(BigInt(f.conductor), 4));
    if (f.conductor == 25) {
      saw_wild = true;
      EXPECT_EQ(f.at(5), LocalDatum::wild_at(5, 8));
    }
    if (f.conductor == 11) {
      EXPECT_EQ(f.at(11), LocalDatum::of(TameInertia::abelian(5, 5)));
    }
  }
  EXPECT_TRUE(saw_wild);
}

TEST(Conductors, DivisibilityCount) {
  BigInt X = ipow(BigInt(500), 4);
  std::uint64_t all = 0, by11 = 0;
  for (const auto& c : enumerate_conductors(5, X)) {
    all += c.num_fields;
    if (c.conductor % 11 == 0) by11 += c.num_fields;
  }
  EXPECT_EQ(count_with_divisibility(5, X, 1), all);
  EXPECT_EQ(count_with_divisibility(5, X, 11), by11);
  EXPECT_EQ(count_with_divisibility(5, X, X + 1), 0u);
}

TEST(Coefficients, WildTermWeight) {
  auto g = g_coefficients(5, ipow(BigInt(5), 8));
  EXPECT_EQ(g.at(ipow(BigInt(5), 8)), 6);
  EXPECT_EQ(g.at(ipow(BigInt(11), 4)), 4);
  EXPECT_EQ(g.at(1), 1);
  EXPECT_EQ(g.at(2), 0);
  auto h = g_coefficients(5, ipow(BigInt(5), 8), WildWeight::arithmetic);
  EXPECT_EQ(h.at(ipow(BigInt(5), 8)), 4);
}

TEST(Coefficients, ProductOfTamePrimes) {
  BigInt n = ipow(BigInt(11 * 31), 4);
  auto g = g_coefficients(5, n);
  EXPECT_EQ(g.at(n), 16);
}

TEST(Truncated, AgreesWithEulerProduct) {
  const int ell = 7;
  auto g = g_coefficients(ell, ipow(BigInt(3000), ell - 1));
  Rational s(1, 2);
  auto a = eval_truncated(g, s, g.bound);
  auto b = g_lambda_value(ell, s, {}, 3000000);
  EXPECT_NEAR(static_cast<double>(a.value), static_cast<double>(b.value),
              static_cast<double>(a.tail_bound + b.tail_bound));
  EXPECT_GT(a.value, 1.0L);
}

TEST(Truncated, IncreasesWithCutoff) {
  auto g = g_coefficients(5, ipow(BigInt(2000), 4));
  long double prev = 0;
  for (int f : {20, 100, 500, 2000}) {
    auto v = eval_truncated(g, Rational(1, 2), ipow(BigInt(f), 4));
    EXPECT_GE(v.value, prev);
    prev = v.value;
  }
}

TEST(Truncated, RejectsDivergentPoint) {
  auto g = g_coefficients(7, BigInt(1000000));
  EXPECT_THROW(eval_truncated(g, Rational(1, 6), g.bound), divergence_error);
  EXPECT_THROW(eval_truncated(g, Rational(1, 10), g.bound), divergence_error);
  EXPECT_THROW(eval_truncated(g, Rational(1, 2), g.bound + 1), bound_error);
  EXPECT_THROW(g_lambda_value(7, Rational(1, 7), {}), divergence_error);
}

TEST(Truncated, FiniteSeriesIsExact) {
  DirichletCoeffs g;
  g.terms = {{1, 1}, {4, 2}};
  g.bound = 4;
  g.finite = true;
  auto v = eval_truncated(g, Rational(1, 2), BigInt(100));
  EXPECT_DOUBLE_EQ(static_cast<double>(v.value), 2.0);
  EXPECT_EQ(v.tail_bound, 0);
}

TEST(LocalConditions, ForcedPrimeFactorsOut) {
  const int ell = 7;
  Rational s(2, 3);
  auto base = g_lambda_value(ell, s, {}, 200000);
  AbelianCondition c;
  c.forced = {29};
  auto forced = g_lambda_value(ell, s, c, 200000);
  long double x = 6 * std::pow(29.0L, -to_double(s) * 6);
  EXPECT_NEAR(static_cast<double>(forced.value), static_cast<double>(base.value * x / (1 + x)), 1e-15);
  AbelianCondition d;
  d.forbidden = {29};
  auto off = g_lambda_value(ell, s, d, 200000);
  EXPECT_NEAR(static_cast<double>(off.value + forced.value), static_cast<double>(base.value), 1e-15);
}

TEST(LocalConditions, ImpossiblePrimeGivesZero) {
  AbelianCondition c;
  c.forced = {11};
  EXPECT_EQ(g_lambda_value(7, Rational(1, 2), c).value, 0);
  AbelianCondition bad;
  bad.forced = {29};
  bad.forbidden = {29};
  EXPECT_THROW(g_lambda_value(7, Rational(1, 2), bad), usage_error);
}
