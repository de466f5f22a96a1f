#pragma once

// Prime ranges, Jacobi symbols, square roots mod p, Fermat quotients.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "hlv/modnum.hpp"

namespace hlv {

class NoSquareRoot : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline bool is_prime(std::uint64_t n) noexcept { return detail::is_prime_u64(n); }

struct PrimeRange {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::vector<std::uint64_t> primes;
};

/// All primes in [lo, hi], by a segmented sieve of Eratosthenes.
inline PrimeRange sieve(std::uint64_t lo, std::uint64_t hi) {
  if (lo < 2 || lo > hi)
    throw UsageError("sieve range must satisfy 2 <= lo <= hi");
  if (hi >= Modulus::prime_limit)
    throw UsageError("sieve upper bound must be below 2^21");

  PrimeRange out{lo, hi, {}};

  std::uint64_t root = 1;
  while ((root + 1) * (root + 1) <= hi) ++root;
  std::vector<char> small(root + 1, 1);
  std::vector<std::uint64_t> base;
  for (std::uint64_t i = 2; i <= root; ++i) {
    if (!small[i]) continue;
    base.push_back(i);
    for (std::uint64_t j = i * i; j <= root; j += i) small[j] = 0;
  }

  constexpr std::uint64_t segment = 1 << 15;
  std::vector<char> mark(segment);
  for (std::uint64_t start = lo; start <= hi; start += segment) {
    const std::uint64_t end = std::min(hi, start + segment - 1);
    std::fill(mark.begin(), mark.end(), 1);
    for (std::uint64_t q : base) {
      std::uint64_t first = std::max(q * q, (start + q - 1) / q * q);
      for (std::uint64_t j = first; j <= end; j += q) mark[j - start] = 0;
    }
    for (std::uint64_t n = start; n <= end; ++n)
      if (mark[n - start]) out.primes.push_back(n);
  }
  return out;
}

/// Jacobi symbol (a/n) for odd n >= 1; negative a allowed.
inline int jacobi(std::int64_t a, std::int64_t n) {
  if (n < 1 || n % 2 == 0)
    throw UsageError("jacobi symbol needs odd positive n, got " +
                     std::to_string(n));
  std::int64_t r = a % n;
  if (r < 0) r += n;
  std::uint64_t x = static_cast<std::uint64_t>(r);
  std::uint64_t y = static_cast<std::uint64_t>(n);
  int sign = 1;
  while (x != 0) {
    while (x % 2 == 0) {
      x /= 2;
      const std::uint64_t y8 = y % 8;
      if (y8 == 3 || y8 == 5) sign = -sign;
    }
    std::swap(x, y);
    if (x % 4 == 3 && y % 4 == 3) sign = -sign;
    x %= y;
  }
  return y == 1 ? sign : 0;
}

/// Square root modulo a prime by Tonelli-Shanks. Returns the smaller root.
inline Residue sqrt_mod(const Residue& a) {
  const Modulus& mod = a.modulus();
  if (mod.power() != 1)
    throw UsageError("sqrt_mod works modulo a prime only");
  const std::uint64_t p = mod.prime();
  const std::uint64_t x = a.value();
  if (x == 0) return a;
  if (jacobi(static_cast<std::int64_t>(x), static_cast<std::int64_t>(p)) != 1)
    throw NoSquareRoot(std::to_string(x) + " is not a square mod " +
                       std::to_string(p));

  std::uint64_t q = p - 1;
  int s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::uint64_t z = 2;
  while (jacobi(static_cast<std::int64_t>(z), static_cast<std::int64_t>(p)) != -1)
    ++z;

  std::uint64_t c = mod.pow(z, q);
  std::uint64_t t = mod.pow(x, q);
  std::uint64_t r = mod.pow(x, (q + 1) / 2);
  int m = s;
  while (t != 1) {
    int i = 0;
    for (std::uint64_t t2 = t; t2 != 1; t2 = mod.mul(t2, t2)) ++i;
    std::uint64_t b = c;
    for (int j = 0; j < m - i - 1; ++j) b = mod.mul(b, b);
    r = mod.mul(r, b);
    c = mod.mul(b, b);
    t = mod.mul(t, c);
    m = i;
  }
  return Residue::canonical(std::min(r, p - r), mod);
}

/// q_p(a) = (a^(p-1) - 1)/p reduced mod p.
inline Residue fermat_quotient(std::int64_t a, std::uint64_t p) {
  Modulus m2(p, 2);
  Residue base = res_from_int(a, m2);
  if (base.value() % p == 0)
    throw UsageError("fermat quotient undefined: " + std::to_string(p) +
                     " divides " + std::to_string(a));
  Residue t = res_pow(base, static_cast<std::int64_t>(p - 1)) - res_from_int(1, m2);
  return lift_div_p(t);
}

}  // namespace hlv
