#include <gtest/gtest.h>

#include <random>

#include "hlv/modnum.hpp"

using namespace hlv;

namespace {

const Modulus m5(5, 1), m7(7, 1), m25(5, 2), m49(7, 2);

}  // namespace

TEST(Modulus, Construction) {
  EXPECT_EQ(Modulus(5, 3).value(), 125u);
  EXPECT_EQ(Modulus(2097143, 3).value(), 2097143ULL * 2097143ULL * 2097143ULL);
  EXPECT_THROW(Modulus(3, 1), UsageError);
  EXPECT_THROW(Modulus(9, 1), UsageError);
  EXPECT_THROW(Modulus(7, 0), UsageError);
  EXPECT_THROW(Modulus(7, 4), UsageError);
  EXPECT_THROW(Modulus(2097169, 1), UsageError);  // prime, but above the cap
}

TEST(Residue, FromInt) {
  EXPECT_EQ(res_from_int(7, m5).value(), 2u);
  EXPECT_EQ(res_from_int(-3, m7).value(), 4u);
  EXPECT_EQ(res_from_int(0, m25).value(), 0u);
  EXPECT_EQ(res_from_int(-49, m49).value(), 0u);
  EXPECT_EQ(res_from_int(INT64_MIN, m49).value(), static_cast<std::uint64_t>(((INT64_MIN % 49) + 49) % 49));
}

TEST(Residue, Arith) {
  EXPECT_EQ(res_arith(res_from_int(3, m7), res_from_int(5, m7), ArithOp::mul).value(), 1u);
  EXPECT_EQ(res_arith(res_from_int(0, m25), res_from_int(6, m25), ArithOp::add).value(), 6u);
  EXPECT_EQ(res_arith(res_from_int(2, m49), res_from_int(5, m49), ArithOp::sub).value(), 46u);
  EXPECT_THROW(res_arith(res_from_int(1, m7), res_from_int(1, m49), ArithOp::add), UsageError);
  EXPECT_THROW((void)(res_from_int(1, m5) * res_from_int(1, m7)), UsageError);
}

TEST(Residue, Inverse) {
  EXPECT_EQ(res_inv(res_from_int(2, m7)).value(), 4u);
  EXPECT_EQ(res_inv(res_from_int(6, m25)).value(), 21u);
  EXPECT_EQ(res_inv(res_from_int(8, m49)).value(), 43u);
  try {
    res_inv(res_from_int(14, m49));
    FAIL() << "expected NotInvertible";
  } catch (const NotInvertible& e) {
    EXPECT_EQ(e.gcd(), 7u);
  }
  EXPECT_THROW(res_inv(res_from_int(0, m5)), NotInvertible);
}

TEST(Residue, Pow) {
  EXPECT_EQ(res_pow(res_from_int(3, m49), 6).value(), 43u);
  EXPECT_EQ(res_pow(res_from_int(2, m49), -3).value(), 43u);
  for (int a = 1; a < 25; ++a)
    if (a % 5) {
      EXPECT_EQ(res_pow(res_from_int(a, m25), 0).value(), 1u);
    }
  EXPECT_EQ(res_pow(res_from_int(0, m25), 0).value(), 1u);
  EXPECT_THROW(res_pow(res_from_int(7, m49), -1), NotInvertible);
}

TEST(Residue, LiftDivP) {
  EXPECT_EQ(lift_div_p(res_from_int(0, m25)).value(), 0u);
  EXPECT_EQ(lift_div_p(res_from_int(0, m25)).modulus(), m5);
  EXPECT_EQ(lift_div_p(res_from_int(35, m49)).value(), 5u);
  EXPECT_THROW(lift_div_p(res_from_int(36, m49)), NotDivisible);
  EXPECT_THROW(lift_div_p(res_from_int(0, m7)), UsageError);
}

TEST(Residue, ReduceTo) {
  const Modulus m3(11, 3);
  EXPECT_EQ(reduce_to(res_from_int(1000, m3), 1).value(), 1000u % 11);
  EXPECT_EQ(reduce_to(res_from_int(1000, m3), 2).value(), 1000u % 121);
  EXPECT_THROW(reduce_to(res_from_int(3, m7), 2), UsageError);
}

// Barrett reduction against plain division, including moduli near 2^32
// (the largest p^2 on the fast path) and the 128-bit path for p^3.
TEST(ModulusProperty, MulMatchesDivision) {
  std::mt19937_64 rng(20);
  for (std::uint64_t p : {5ULL, 7ULL, 65519ULL, 65521ULL, 1000003ULL, 2097143ULL}) {
    for (int k = 1; k <= 3; ++k) {
      const Modulus m(p, k);
      for (int i = 0; i < 20000; ++i) {
        std::uint64_t a = rng() % m.value(), b = rng() % m.value();
        if (i < 4) a = b = m.value() - 1 - static_cast<std::uint64_t>(i);
        const auto want = static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m.value());
        ASSERT_EQ(m.mul(a, b), want) << "p=" << p << " k=" << k << " a=" << a << " b=" << b;
      }
    }
  }
}

TEST(ModulusProperty, InverseInvolution) {
  std::mt19937_64 rng(1);
  for (std::uint64_t p : {5ULL, 101ULL, 7919ULL, 2097143ULL}) {
    for (int k = 1; k <= 3; ++k) {
      const Modulus m(p, k);
      for (int i = 0; i < 2000; ++i) {
        Residue a = res_from_int(static_cast<std::int64_t>(rng() >> 2), m);
        if (a.value() % p == 0) continue;
        const Residue b = res_inv(a);
        ASSERT_EQ((a * b).value(), 1u);
        ASSERT_EQ(res_inv(b), a);
      }
    }
  }
}

TEST(ModulusProperty, PowAdditive) {
  std::mt19937_64 rng(2);
  const Modulus m(1000003, 3);
  for (int i = 0; i < 2000; ++i) {
    const Residue a = res_from_int(static_cast<std::int64_t>(rng() >> 1), m);
    const auto e1 = static_cast<std::int64_t>(rng() % 100000), e2 = static_cast<std::int64_t>(rng() % 100000);
    ASSERT_EQ(res_pow(a, e1 + e2), res_pow(a, e1) * res_pow(a, e2));
  }
}

TEST(ModulusProperty, LiftInvertsTimesP) {
  std::mt19937_64 rng(3);
  for (std::uint64_t p : {5ULL, 13ULL, 9973ULL, 2097143ULL}) {
    for (int k = 2; k <= 3; ++k) {
      const Modulus m(p, k);
      const Modulus lower = m.with_power(k - 1);
      for (int i = 0; i < 2000; ++i) {
        const std::uint64_t x = rng() % lower.value();
        const Residue px = Residue::canonical(x, m) * res_from_int(static_cast<std::int64_t>(p), m);
        ASSERT_EQ(lift_div_p(px), Residue::canonical(x, lower));
      }
    }
  }
}

TEST(ModulusProperty, ReductionConsistency) {
  std::mt19937_64 rng(4);
  for (std::uint64_t p : {7ULL, 8191ULL, 2097143ULL}) {
    const Modulus m3(p, 3), m1(p, 1);
    for (int i = 0; i < 2000; ++i) {
      const auto x = static_cast<std::int64_t>(rng());
      ASSERT_EQ(reduce_to(res_from_int(x, m3), 1), res_from_int(x, m1));
    }
  }
}
