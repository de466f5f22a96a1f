#include <gtest/gtest.h>

#include "hlv/oracle.hpp"
#include "hlv/scan.hpp"

using namespace hlv;
using oracle::BigRational;

TEST(Oracle, ReduceMod) {
  EXPECT_EQ(oracle::reduce_mod(BigRational(11, 6), Modulus(5, 2)).value(), 6u);
  EXPECT_EQ(oracle::reduce_mod(BigRational(-1, 1), Modulus(7, 1)).value(), 6u);
  EXPECT_THROW(oracle::reduce_mod(BigRational(1, 5), Modulus(5, 2)), oracle::NotReducible);
}

TEST(Oracle, CostGuard) {
  EXPECT_NO_THROW(oracle::ExactEvaluator(499));
  EXPECT_THROW(oracle::ExactEvaluator(503), UsageError);
  EXPECT_THROW(oracle::ExactEvaluator(9), UsageError);
}

TEST(Oracle, PinnedSums) {
  const Params fib{1, -1, std::nullopt, std::nullopt};
  const auto t = oracle::exact_sum("thm1.1.v", 5, fib);
  EXPECT_EQ(t.lhs, BigRational(1345, 144));
  EXPECT_EQ(t.lhs.get_num() % 5, 0);
  const auto c = oracle::exact_sum("cor1.1", 5, {});
  EXPECT_EQ(c.lhs, BigRational(1835, 2304));
  EXPECT_EQ(oracle::exact_sum("wolstenholme", 5, {}).lhs, BigRational(25, 12));
  EXPECT_EQ(oracle::exact_sum("wolstenholme", 7, {}).lhs, BigRational(49, 20));
  EXPECT_EQ(oracle::exact_sum("eq1.8", 5, {}).lhs, BigRational(13, 3));
  const auto l = oracle::ExactEvaluator(7).reduced("lemma3.2", {});
  EXPECT_EQ(l.first.value(), 28u);
  EXPECT_EQ(l.second.value(), 28u);
}

// Both sides separately, every check, default parameters, small primes.
// The full range up to 200 runs in the acceptance binary.
TEST(Oracle, MatchesFastPipeline) {
  for (std::uint64_t p : sieve(5, 60).primes) {
    const oracle::ExactEvaluator exact(p);
    Workspace ws(p);
    for (const auto& c : catalog()) {
      for (const auto& q : param_sets(c, ParamPlan{})) {
        for (const auto& r : evaluate(c, ws, q)) {
          if (r.status == Status::skip) continue;
          const auto cmp = oracle::cross_check(r, exact);
          ASSERT_TRUE(cmp.agree) << r.id << " p=" << p << " fast (" << r.lhs.value() << "," << r.rhs.value()
                                 << ") oracle (" << cmp.oracle_lhs.value() << "," << cmp.oracle_rhs.value() << ")";
        }
      }
    }
  }
}
