#include <gtest/gtest.h>

#include <random>

#include "hlv/primes.hpp"
#include "hlv/quadring.hpp"

using namespace hlv;

TEST(QuadRing, Examples) {
  const LucasParams fib(1, -1);
  const Modulus m(7, 1);
  const auto a = QuadElem::alpha(fib, m);
  const auto aa = qmul(a, a);
  EXPECT_EQ(aa.a.value(), 1u);
  EXPECT_EQ(aa.b.value(), 1u);
  EXPECT_EQ(qmul(aa, QuadElem::scalar(1, fib, m)), aa);

  const LucasParams lp(3, 5);
  const Modulus m2(11, 2);
  EXPECT_EQ(qmul(QuadElem::alpha(lp, m2), QuadElem::beta(lp, m2)), QuadElem::scalar(5, lp, m2));
  // sqrt(Delta)^2 = Delta
  const auto d = QuadElem::sqrt_delta(lp, m2);
  EXPECT_EQ(qmul(d, d), QuadElem::scalar(lp.delta, lp, m2));

  const auto a8 = qpow(a, 8);
  EXPECT_EQ(a8.a.value(), 6u);
  EXPECT_EQ(a8.b.value(), 0u);
  EXPECT_EQ(a8, QuadElem::scalar(-1, fib, m));
  EXPECT_EQ(jacobi(5, 7), -1);
  EXPECT_EQ(qpow(aa, 0), QuadElem::scalar(1, fib, m));
}

TEST(QuadRing, Trace) {
  const LucasParams fib(1, -1);
  const Modulus m(101, 1);
  auto [t1, u1] = trace_and_ucoef(QuadElem::alpha(fib, m));
  EXPECT_EQ(t1.value(), 1u);
  EXPECT_EQ(u1.value(), 1u);
  auto [t5, u5] = trace_and_ucoef(qpow(QuadElem::alpha(fib, m), 5));
  EXPECT_EQ(t5.value(), 11u);
  EXPECT_EQ(u5.value(), 5u);
  auto [tc, uc] = trace_and_ucoef(QuadElem::scalar(9, fib, m));
  EXPECT_EQ(tc.value(), 18u);
  EXPECT_EQ(uc.value(), 0u);
}

TEST(QuadRing, MismatchedRings) {
  const Modulus m(7, 1);
  EXPECT_THROW(qmul(QuadElem::alpha(LucasParams(1, -1), m), QuadElem::alpha(LucasParams(1, 1), m)), UsageError);
  EXPECT_THROW(qadd(QuadElem::alpha(LucasParams(1, -1), m), QuadElem::alpha(LucasParams(1, -1), Modulus(7, 2))),
               UsageError);
}

TEST(QuadRing, ConjugateIsBeta) {
  const LucasParams lp(-4, 7);
  const Modulus m(13, 3);
  EXPECT_EQ(qconj(QuadElem::alpha(lp, m)), QuadElem::beta(lp, m));
  EXPECT_EQ(qadd(QuadElem::alpha(lp, m), QuadElem::beta(lp, m)), QuadElem::scalar(-4, lp, m));
  EXPECT_EQ(qsub(QuadElem::alpha(lp, m), QuadElem::beta(lp, m)), QuadElem::sqrt_delta(lp, m));
}

// alpha^n = -B u_{n-1} + u_n alpha, and the trace is v_n.
TEST(QuadRing, PowersReproduceLucas) {
  std::mt19937_64 rng(31);
  const auto primes = sieve(5, 3000).primes;
  for (int i = 0; i < 60; ++i) {
    const LucasParams lp(static_cast<std::int64_t>(rng() % 201) - 100, static_cast<std::int64_t>(rng() % 201) - 100);
    const std::uint64_t p = primes[rng() % primes.size()];
    const Modulus m(p, 1 + static_cast<int>(rng() % 3));
    const auto table = lucas_table(lp, m, 201);
    const auto alpha = QuadElem::alpha(lp, m);
    QuadElem x = alpha;
    for (std::uint64_t n = 1; n <= 200; ++n) {
      const auto direct = qpow(alpha, n);
      ASSERT_EQ(direct, x);
      ASSERT_EQ(direct.a, -(res_from_int(lp.B, m) * table.U(n - 1)));
      ASSERT_EQ(direct.b, table.U(n));
      ASSERT_EQ(trace_and_ucoef(direct).first, table.V(n));
      x = qmul(x, alpha);
    }
  }
}

// Frobenius: alpha^(p - (Delta/p)) and beta^(p - (Delta/p)) are B^((1 - (Delta/p))/2).
TEST(QuadRing, FrobeniusPower) {
  const std::vector<std::pair<std::int64_t, std::int64_t>> pairs{{1, -1}, {2, 3}, {1, 4}, {3, 1}, {2, 2},
                                                                 {-5, 7}, {6, -11}, {10, 3}};
  for (std::uint64_t p : sieve(5, 1000).primes) {
    const Modulus m(p, 1);
    for (auto [A, B] : pairs) {
      const LucasParams lp(A, B);
      const auto sp = static_cast<std::int64_t>(p);
      if (B % sp == 0 || lp.delta % sp == 0) continue;
      const int d = jacobi(lp.delta, sp);
      const std::uint64_t e = d == 1 ? p - 1 : p + 1;
      const auto want = QuadElem::scalar(d == 1 ? 1 : B, lp, m);
      ASSERT_EQ(qpow(QuadElem::alpha(lp, m), e), want) << p << ' ' << A << ' ' << B;
      ASSERT_EQ(qpow(QuadElem::beta(lp, m), e), want) << p << ' ' << A << ' ' << B;
    }
  }
}
