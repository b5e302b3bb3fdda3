#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "oracles.hpp"
#include "s3a/densities.hpp"

using namespace s3a;
using F50 = boost::multiprecision::cpp_bin_float_50;

namespace {

void expect_digits(const Real50& got, const char* want, int digits) {
  F50 w(want), g(got);
  F50 rel = abs(g - w) / abs(w);
  EXPECT_LT(rel, pow(F50(10), -digits)) << "got " << g.str(35) << " want " << want;
}

}  // namespace

TEST(Constants, SpecialValues) {
  auto c = global_constants(30);
  expect_digits(c.zeta3, oracle::kZeta3, 30);
  expect_digits(c.zeta5_3, oracle::kZeta5_3, 30);
  expect_digits(c.zeta1_3, oracle::kZeta1_3, 30);
  expect_digits(c.gamma2_3, oracle::kGamma2_3, 30);
}

TEST(Constants, LeadingAndSecondary) {
  auto c = global_constants(30);
  expect_digits(c.A, oracle::kA, 30);
  expect_digits(c.B, oracle::kB, 30);
  // assembled from the frozen inputs directly
  F50 z3(oracle::kZeta3), z53(oracle::kZeta5_3), z13(oracle::kZeta1_3), g(oracle::kGamma2_3);
  F50 B = (1 + sqrt(F50(3))) * 4 * z13 / (5 * g * g * g * z53);
  EXPECT_LT(abs(B - F50(oracle::kB)), F50("1e-33"));
  EXPECT_LT(abs(1 / (3 * z3) - F50(oracle::kA)), F50("1e-33"));
  EXPECT_NEAR(static_cast<double>(const_A()), 0.2773024575269025, 1e-15);
  EXPECT_NEAR(static_cast<double>(const_B()), -0.4034836366639468, 1e-15);
}

TEST(Constants, DigitsRequest) {
  EXPECT_EQ(global_constants(12).A_str(), "0.277302457527");
  EXPECT_THROW(global_constants(31), precision_error);
  EXPECT_THROW(global_constants(0), precision_error);
}

TEST(LocalDensities, MainDensitiesSumToOne) {
  for (std::uint64_t p : {5, 7, 11, 13, 101, 1009}) {
    Rational s = main_density(p, RamType::unramified) + main_density(p, RamType::partial) +
                 main_density(p, RamType::total);
    EXPECT_EQ(s, 1) << p;
  }
  EXPECT_EQ(main_density(5, RamType::partial), Rational(25, 31 * 5));
  EXPECT_EQ(main_density(7, RamType::total), Rational(1, 57));
}

TEST(LocalDensities, SecondaryDensities) {
  for (std::uint64_t p : {5, 7, 11, 13, 101}) {
    long double x = p, u = std::pow(x, -1.0L / 3);
    long double k = (1 - std::pow(x, -5.0L / 3)) * (1 + 1 / x) / (1 - u);
    EXPECT_NEAR(static_cast<double>(secondary_density(p, RamType::partial)),
                static_cast<double>((1 + u) * (1 + u) / (k * x)), 1e-15);
    EXPECT_NEAR(static_cast<double>(secondary_density(p, RamType::total)),
                static_cast<double>((1 + u) / (k * x * x)), 1e-15);
    EXPECT_GT(secondary_density(p, RamType::partial), secondary_density(p, RamType::total));
  }
}

TEST(LocalDensities, RecordAtPrime) {
  auto d = LocalDensity::at(11);
  EXPECT_EQ(d.Ap, main_density(11, RamType::partial));
  EXPECT_EQ(d.Ap2, main_density(11, RamType::total));
  EXPECT_NEAR(static_cast<double>(d.Cp_err), std::pow(11.0, 0.8), 1e-12);
}

TEST(Predicted, UnconditionedCount) {
  auto a = predicted_Nqr(1e6L, 1, 1);
  EXPECT_NEAR(static_cast<double>(a.main), 277302.4575269025, 1e-6);
  EXPECT_NEAR(static_cast<double>(a.secondary), -0.4034836366639468 * 1e5, 1e-6);
  EXPECT_EQ(predicted_Nqr(0, 1, 1).total(), 0);
}

TEST(Predicted, ConditionsMultiplyDensities) {
  auto a = predicted_Nqr(1e6L, 35, 11), b = predicted_Nqr(1e6L, 1, 1);
  long double f = main_density(5, RamType::partial).convert_to<long double>() *
                  main_density(7, RamType::partial).convert_to<long double>() *
                  main_density(11, RamType::total).convert_to<long double>();
  EXPECT_NEAR(static_cast<double>(a.main / b.main), static_cast<double>(f), 1e-15);
  EXPECT_THROW(predicted_Nqr(1e6L, 6, 1), hypothesis_error);
  EXPECT_THROW(predicted_Nqr(1e6L, 5, 5), hypothesis_error);
}
