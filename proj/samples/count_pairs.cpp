// S3 x C7 pairs two ways, plus the predicted count.
#include <iostream>

#include "s3a/euler_constants.hpp"
#include "s3a/sieve_engine.hpp"

int main() {
  using namespace s3a;
  auto U = PairUniverse::build(7, 150000, BigInt(1200000000000ULL));
  BigInt X = 2 * ipow(BigInt(23), 7) * ipow(BigInt(29), 18);
  auto a = assemble_G(X, U);
  std::cout << "X = " << X << "\n";
  std::cout << "sieve sum  " << a.G << " over " << a.terms.size() << " cells\n";
  for (const auto& t : a.terms) std::cout << "  " << to_string(t.rho) << "  L=" << t.L << "  " << t.count << "\n";
  std::cout << "direct     " << direct_pair_count(X, U) << "\n";
  auto f = final_constants(7, 1000000);
  std::cout << "C1 X^(1/7) + C2 X^(5/42) = " << static_cast<double>(predicted_pair_count(f, log_big(X))) << "\n";
}
