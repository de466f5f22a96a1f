#include <gtest/gtest.h>

#include <random>

#include "hlv/primes.hpp"

using namespace hlv;

namespace {

bool trial_division(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST(Sieve, Examples) {
  EXPECT_EQ(sieve(2, 12).primes, (std::vector<std::uint64_t>{2, 3, 5, 7, 11}));
  EXPECT_TRUE(sieve(14, 16).primes.empty());
  EXPECT_EQ(sieve(2, 9999).primes.size(), 1229u);
  EXPECT_THROW(sieve(1, 10), UsageError);
  EXPECT_THROW(sieve(10, 9), UsageError);
  EXPECT_THROW(sieve(2, std::uint64_t{1} << 21), UsageError);
}

TEST(Sieve, MatchesTrialDivision) {
  // spans several segments, with lo not on a segment boundary
  const auto r = sieve(60001, 140000);
  std::vector<std::uint64_t> want;
  for (std::uint64_t n = 60001; n <= 140000; ++n)
    if (trial_division(n)) want.push_back(n);
  EXPECT_EQ(r.primes, want);
  const auto top = sieve(2097000, 2097151);
  ASSERT_FALSE(top.primes.empty());
  EXPECT_EQ(top.primes.back(), 2097143u);
}

TEST(Jacobi, Examples) {
  EXPECT_EQ(jacobi(2, 15), 1);
  EXPECT_EQ(jacobi(7, 15), -1);
  for (std::int64_t n = 1; n < 200; n += 2) EXPECT_EQ(jacobi(1, n), 1);
  EXPECT_EQ(jacobi(5, 15), 0);
  EXPECT_EQ(jacobi(-1, 13), 1);
  EXPECT_EQ(jacobi(-1, 7), -1);
  EXPECT_EQ(jacobi(-3, 7), 1);
  EXPECT_THROW(jacobi(3, 8), UsageError);
  EXPECT_THROW(jacobi(3, -5), UsageError);
  EXPECT_THROW(jacobi(3, 0), UsageError);
}

TEST(Jacobi, Multiplicative) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20000; ++i) {
    const auto n = static_cast<std::int64_t>(rng() % 100000) * 2 + 1;
    const auto a = static_cast<std::int64_t>(rng() % 200001) - 100000;
    const auto b = static_cast<std::int64_t>(rng() % 200001) - 100000;
    ASSERT_EQ(jacobi(a * b, n), jacobi(a, n) * jacobi(b, n)) << a << ' ' << b << ' ' << n;
  }
}

TEST(Jacobi, EulerCriterion) {
  for (std::uint64_t p : sieve(5, 1000).primes) {
    const Modulus m(p, 1);
    for (std::uint64_t a = 1; a < p; ++a) {
      const std::uint64_t e = m.pow(a, (p - 1) / 2);
      ASSERT_EQ(m.reduce(jacobi(static_cast<std::int64_t>(a), static_cast<std::int64_t>(p))), e)
          << "a=" << a << " p=" << p;
    }
  }
}

TEST(SqrtMod, Examples) {
  EXPECT_EQ(sqrt_mod(res_from_int(2, Modulus(7, 1))).value(), 3u);
  EXPECT_EQ(sqrt_mod(res_from_int(-1, Modulus(13, 1))).value(), 5u);
  for (std::uint64_t p : sieve(7, 500).primes) EXPECT_EQ(sqrt_mod(res_from_int(4, Modulus(p, 1))).value(), 2u);
  EXPECT_EQ(sqrt_mod(res_from_int(0, Modulus(11, 1))).value(), 0u);
  EXPECT_THROW(sqrt_mod(res_from_int(3, Modulus(7, 1))), NoSquareRoot);
  EXPECT_THROW(sqrt_mod(res_from_int(4, Modulus(7, 2))), UsageError);
}

TEST(SqrtMod, RecoversRoot) {
  std::mt19937_64 rng(12);
  // 2^20 + 7 and 65537 have large 2-power parts in p - 1
  for (std::uint64_t p : {13ULL, 17ULL, 97ULL, 7681ULL, 65537ULL, 1048583ULL, 2097143ULL}) {
    const Modulus m(p, 1);
    for (int i = 0; i < 500; ++i) {
      const std::uint64_t b = 1 + rng() % (p - 1);
      const Residue r = sqrt_mod(Residue::canonical(m.mul(b, b), m));
      ASSERT_TRUE(r.value() == b || r.value() == p - b);
      ASSERT_LE(r.value(), p - r.value());
    }
  }
}

TEST(FermatQuotient, Examples) {
  EXPECT_EQ(fermat_quotient(3, 7).value(), 6u);
  EXPECT_EQ(fermat_quotient(2, 7).value(), 2u);
  for (std::uint64_t p : sieve(5, 200).primes) EXPECT_EQ(fermat_quotient(1, p).value(), 0u);
  EXPECT_EQ(fermat_quotient(-1, 11).value(), 0u);
  EXPECT_EQ(fermat_quotient(2, 1093).value(), 0u);  // Wieferich prime
  EXPECT_THROW(fermat_quotient(14, 7), UsageError);
}

TEST(FermatQuotient, Logarithmic) {
  std::mt19937_64 rng(13);
  for (std::uint64_t p : sieve(5, 2000).primes) {
    const auto sp = static_cast<std::int64_t>(p);
    for (int i = 0; i < 20; ++i) {
      const auto a = static_cast<std::int64_t>(rng() % 100000) + 1;
      const auto b = static_cast<std::int64_t>(rng() % 100000) + 1;
      if (a % sp == 0 || b % sp == 0) continue;
      ASSERT_EQ(fermat_quotient(a * b, p), fermat_quotient(a, p) + fermat_quotient(b, p));
    }
  }
}
