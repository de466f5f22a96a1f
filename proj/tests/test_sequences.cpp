#include <gtest/gtest.h>

#include <random>

#include "hlv/primes.hpp"
#include "hlv/sequences.hpp"

using namespace hlv;

namespace {

// binom(n, r) mod p for n, r < p^2 by Lucas' theorem
std::uint64_t lucas_binom_mod_p(std::uint64_t n, std::uint64_t r, std::uint64_t p) {
  auto small = [p](std::uint64_t a, std::uint64_t b) -> std::uint64_t {
    if (b > a) return 0;
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t i = 0; i < b; ++i) {
      num = num * ((a - i) % p) % p;
      den = den * ((i + 1) % p) % p;
    }
    return num * Modulus(p, 1).inv(den) % p;
  };
  return small(n % p, r % p) * small(n / p, r / p) % p;
}

std::vector<std::pair<std::int64_t, std::int64_t>> sample_pairs(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (int i = 0; i < count; ++i)
    out.emplace_back(static_cast<std::int64_t>(rng() % 201) - 100, static_cast<std::int64_t>(rng() % 201) - 100);
  return out;
}

}  // namespace

TEST(LucasParams, Delta) {
  EXPECT_EQ(LucasParams(1, -1).delta, 5);
  EXPECT_EQ(LucasParams(4, 4).delta, 0);
  EXPECT_EQ(LucasParams(-3, 5).delta, -11);
  EXPECT_THROW(LucasParams(std::int64_t{1} << 30, 0), UsageError);
}

TEST(BatchInverse, MatchesSingleInverses) {
  const Modulus m(10007, 2);
  std::vector<std::uint64_t> xs{1, 2, 3, 10006, 12345, 99999};
  const auto inv = batch_inverse(xs, m);
  for (std::size_t i = 0; i < xs.size(); ++i) EXPECT_EQ(m.mul(xs[i], inv[i]), 1u);
  std::vector<std::uint64_t> bad{3, 10007};
  EXPECT_THROW(batch_inverse(bad, m), NotInvertible);
}

TEST(Harmonic, Examples) {
  const auto t = harmonic_table(5, 2);
  EXPECT_EQ(t.H(3).value(), 6u);
  EXPECT_EQ(t.H(4).value(), 0u);
  EXPECT_EQ(t.H(0).value(), 0u);
  EXPECT_TRUE(t.h2.empty());
  const auto t2 = harmonic_table(7, 1, true);
  // H_2^(2) = 5/4 = 5 * 2 mod 7
  EXPECT_EQ(t2.H2(2).value(), 3u);
  EXPECT_EQ(t2.H2(6).value(), 0u);
}

TEST(Harmonic, Reflection) {
  for (std::uint64_t p : sieve(5, 2000).primes) {
    const auto t = harmonic_table(p, 2);
    for (std::uint64_t j = 0; j < p; ++j) ASSERT_EQ(t.h[p - 1 - j] % p, t.h[j] % p) << p << ' ' << j;
  }
}

TEST(Lucas, Examples) {
  const Modulus m(101, 2);
  const auto fib = lucas_table(LucasParams(1, -1), m, 8);
  std::vector<std::uint64_t> first(fib.u.begin() + 1, fib.u.begin() + 6);
  EXPECT_EQ(first, (std::vector<std::uint64_t>{1, 1, 2, 3, 5}));
  EXPECT_EQ(fib.V(5).value(), 11u);
  const auto a22 = lucas_table(LucasParams(2, 2), m, 6);
  EXPECT_EQ(a22.U(5), res_from_int(-4, m));
  const auto t = lucas_table(LucasParams(1, 4), Modulus(7, 2), 9);
  EXPECT_EQ(t.U(8).value(), 28u);
  EXPECT_THROW(lucas_table(LucasParams(1, 1), m, 1), UsageError);
}

TEST(Lucas, CompanionAndDoubling) {
  for (auto [A, B] : sample_pairs(5, 40)) {
    for (std::uint64_t p : {5ULL, 7ULL, 101ULL, 7919ULL}) {
      for (int k = 1; k <= 3; ++k) {
        const Modulus m(p, k);
        const auto t = lucas_table(LucasParams(A, B), m, 400);
        const std::uint64_t a = m.reduce(A);
        for (std::size_t n = 0; n + 1 < 400; ++n)
          ASSERT_EQ(m.add(m.mul(a, t.u[n]), t.v[n]), m.mul(2, t.u[n + 1])) << A << ' ' << B << ' ' << n;
        for (std::size_t n = 0; 2 * n < 400; ++n) ASSERT_EQ(t.u[2 * n], m.mul(t.u[n], t.v[n]));
      }
    }
  }
}

TEST(ClosedForm, Examples) {
  EXPECT_TRUE(closed_form_check(ClosedForm::neg1_1, 7, 11, 2));
  EXPECT_EQ(closed_form_value(ClosedForm::neg1_1, 7, Modulus(11, 2)).value(), 1u);
  EXPECT_TRUE(closed_form_check(ClosedForm::two_two, 4, 11, 2));
  EXPECT_TRUE(closed_form_check(ClosedForm::zero_delta, 5, 11, 2, 2));
  EXPECT_EQ(closed_form_value(ClosedForm::zero_delta, 5, Modulus(11, 2), 2).value(), 5u);
  EXPECT_THROW(closed_form_check(ClosedForm::zero_delta, 5, 11, 2, 3), UsageError);
}

TEST(ClosedForm, AllFamilies) {
  for (std::uint64_t p : {5ULL, 13ULL, 101ULL}) {
    for (std::uint64_t n = 0; n < 300; ++n) {
      ASSERT_TRUE(closed_form_check(ClosedForm::neg1_1, n, p, 2)) << n;
      ASSERT_TRUE(closed_form_check(ClosedForm::pos1_1, n, p, 2)) << n;
      ASSERT_TRUE(closed_form_check(ClosedForm::two_two, n, p, 3)) << n;
      for (std::int64_t a : {-6, 2, 4, 10, 50})
        ASSERT_TRUE(closed_form_check(ClosedForm::zero_delta, n, p, 2, a)) << n << ' ' << a;
    }
  }
}

TEST(BinomRow, Examples) {
  const auto r = binom_row(5, 2);
  EXPECT_EQ(r.c, (std::vector<std::uint64_t>{1, 4, 6, 4, 1}));
  const auto h = harmonic_table(5, 2);
  // (-1)^2 C[2] = 1 - 5 H_2 mod 25
  EXPECT_EQ(r[2], res_from_int(1, Modulus(5, 2)) - res_from_int(5, Modulus(5, 2)) * h.H(2));
  for (std::uint64_t p : {7ULL, 101ULL, 997ULL}) EXPECT_EQ(binom_row(p, 3).c.back(), 1u);
}

TEST(BinomRow, HarmonicBridge) {
  for (std::uint64_t p : sieve(5, 1000).primes) {
    const Modulus m(p, 2);
    const auto r = binom_row(p, 2);
    const auto h = harmonic_table(p, 2);
    for (std::uint64_t j = 0; j < p; ++j) {
      const std::uint64_t signed_c = j % 2 ? m.neg(r.c[j]) : r.c[j];
      ASSERT_EQ(signed_c, m.sub(1, m.mul(p, h.h[j]))) << p << ' ' << j;
    }
  }
}

TEST(CentralBinom, Examples) {
  const auto t = central_binom_table(5, 3, 6);
  EXPECT_EQ(t[3].unit.value(), 4u);
  EXPECT_EQ(t[3].exponent, 1u);
  EXPECT_EQ(t[3].collapse().value(), 20u);
  EXPECT_EQ(t[5].collapse().value(), 2u);
  EXPECT_EQ(t[0].unit.value(), 1u);
  EXPECT_EQ(t[0].exponent, 0u);
  EXPECT_EQ(t[3].collapse(1).value(), 0u);
  EXPECT_EQ(central_binom_table(7, 2).size(), 7u);
}

TEST(CentralBinom, LucasTheorem) {
  for (std::uint64_t p : sieve(5, 500).primes) {
    const auto t = central_binom_table(p, 3);
    for (std::uint64_t j = 0; j < p; ++j) {
      ASSERT_EQ(t[j].collapse(1).value(), lucas_binom_mod_p(2 * j, j, p)) << p << ' ' << j;
      ASSERT_NE(t[j].unit.value() % p, 0u);
      ASSERT_EQ(t[j].exponent, 2 * j >= p ? 1u : 0u);
    }
  }
}

TEST(Chu, Identity) {
  EXPECT_EQ(chu_sum(4, 2), std::make_pair(std::uint64_t{6}, std::uint64_t{6}));
  EXPECT_EQ(chu_sum(10, 3), std::make_pair(std::uint64_t{120}, std::uint64_t{120}));
  for (std::uint64_t n = 1; n <= 64; ++n) {
    EXPECT_EQ(chu_sum(n, n), std::make_pair(std::uint64_t{1}, std::uint64_t{1}));
    for (std::uint64_t j = 1; j <= n; ++j) {
      const auto [l, r] = chu_sum(n, j);
      ASSERT_EQ(l, r) << n << ' ' << j;
    }
  }
  EXPECT_THROW(chu_sum(3, 0), UsageError);
  EXPECT_THROW(chu_sum(3, 4), UsageError);
  EXPECT_THROW(chu_sum(65, 2), UsageError);
}
