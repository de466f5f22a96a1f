#pragma once

// Residues modulo p, p^2 and p^3 for primes p < 2^21.
//
// Every value is kept canonical in [0, m). Products go through a 128-bit
// intermediate when m does not fit in 32 bits, so nothing overflows for
// m < 2^63.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace hlv {

/// Caller passed something outside an operation's domain.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotInvertible : public std::domain_error {
 public:
  NotInvertible(std::uint64_t value, std::uint64_t modulus, std::uint64_t gcd)
      : std::domain_error(std::to_string(value) + " is not invertible mod " +
                          std::to_string(modulus) + " (gcd " +
                          std::to_string(gcd) + ")"),
        gcd_(gcd) {}
  std::uint64_t gcd() const noexcept { return gcd_; }

 private:
  std::uint64_t gcd_;
};

/// Raised by lift_div_p when the residue is not a multiple of p.
class NotDivisible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace detail {

constexpr bool is_prime_u64(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

constexpr std::uint64_t ipow(std::uint64_t base, int e) noexcept {
  std::uint64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

}  // namespace detail

/// The modulus p^k with p > 3 prime and k in {1, 2, 3}.
class Modulus {
 public:
  /// Exclusive upper bound on p; keeps p^3 below 2^63.
  static constexpr std::uint64_t prime_limit = std::uint64_t{1} << 21;

  Modulus(std::uint64_t p, int k) : p_(p), k_(k), m_(1) {
    if (k < 1 || k > 3)
      throw UsageError("modulus power must be 1, 2 or 3, got " +
                       std::to_string(k));
    if (p <= 3 || p >= prime_limit || !detail::is_prime_u64(p))
      throw UsageError("modulus base must be a prime in (3, 2^21), got " +
                       std::to_string(p));
    m_ = detail::ipow(p, k);
    mu_ = ~std::uint64_t{0} / m_;
  }

  std::uint64_t prime() const noexcept { return p_; }
  int power() const noexcept { return k_; }
  std::uint64_t value() const noexcept { return m_; }

  /// Same prime, different power. No primality re-check.
  Modulus with_power(int k) const {
    if (k < 1 || k > 3)
      throw UsageError("modulus power must be 1, 2 or 3, got " +
                       std::to_string(k));
    return Modulus(p_, k, detail::ipow(p_, k));
  }

  // Raw arithmetic on canonical values in [0, m).

  std::uint64_t reduce(std::int64_t x) const noexcept {
    const auto m = static_cast<std::int64_t>(m_);
    std::int64_t r = x % m;
    return static_cast<std::uint64_t>(r < 0 ? r + m : r);
  }
  std::uint64_t reduce_unsigned(std::uint64_t x) const noexcept {
    return x % m_;
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    std::uint64_t s = a + b;
    return s >= m_ ? s - m_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept {
    return a >= b ? a - b : a + m_ - b;
  }
  std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : m_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
    if (m_ <= 0xffffffffULL) {
      // Barrett: the quotient estimate is short by at most 2.
      const std::uint64_t x = a * b;
      const auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * mu_) >> 64);
      std::uint64_t r = x - q * m_;
      if (r >= m_) r -= m_;
      if (r >= m_) r -= m_;
      return r;
    }
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % m_);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const noexcept {
    std::uint64_t r = m_ == 1 ? 0 : 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  /// Extended Euclid. Throws NotInvertible when gcd(a, m) > 1.
  std::uint64_t inv(std::uint64_t a) const {
    std::int64_t r0 = static_cast<std::int64_t>(m_);
    std::int64_t r1 = static_cast<std::int64_t>(a % m_);
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
      std::int64_t q = r0 / r1;
      r0 = std::exchange(r1, r0 - q * r1);
      s0 = std::exchange(s1, s0 - q * s1);
    }
    if (r0 != 1)
      throw NotInvertible(a % m_, m_, static_cast<std::uint64_t>(r0));
    return reduce(s0);
  }
  /// a^e with e < 0 meaning inv(a)^|e|.
  std::uint64_t pow_signed(std::uint64_t a, std::int64_t e) const {
    if (e >= 0) return pow(a, static_cast<std::uint64_t>(e));
    return pow(inv(a), static_cast<std::uint64_t>(-(e + 1)) + 1);
  }

  friend bool operator==(const Modulus& a, const Modulus& b) noexcept {
    return a.p_ == b.p_ && a.k_ == b.k_;
  }

 private:
  Modulus(std::uint64_t p, int k, std::uint64_t m) : p_(p), k_(k), m_(m), mu_(~std::uint64_t{0} / m) {}

  std::uint64_t p_;
  int k_;
  std::uint64_t m_;
  std::uint64_t mu_ = 0;  // floor((2^64 - 1) / m)
};

/// A canonical residue together with its modulus.
class Residue {
 public:
  Residue(std::int64_t x, const Modulus& m) : value_(m.reduce(x)), mod_(m) {}

  /// Wraps a value already known to lie in [0, m).
  static Residue canonical(std::uint64_t v, const Modulus& m) {
    if (v >= m.value())
      throw UsageError("value " + std::to_string(v) + " is not reduced mod " +
                       std::to_string(m.value()));
    return Residue(v, m, 0);
  }

  std::uint64_t value() const noexcept { return value_; }
  const Modulus& modulus() const noexcept { return mod_; }
  bool is_zero() const noexcept { return value_ == 0; }

  friend Residue operator+(const Residue& a, const Residue& b) {
    a.require_same(b);
    return Residue(a.mod_.add(a.value_, b.value_), a.mod_, 0);
  }
  friend Residue operator-(const Residue& a, const Residue& b) {
    a.require_same(b);
    return Residue(a.mod_.sub(a.value_, b.value_), a.mod_, 0);
  }
  friend Residue operator*(const Residue& a, const Residue& b) {
    a.require_same(b);
    return Residue(a.mod_.mul(a.value_, b.value_), a.mod_, 0);
  }
  Residue operator-() const { return Residue(mod_.neg(value_), mod_, 0); }

  friend bool operator==(const Residue& a, const Residue& b) noexcept {
    return a.mod_ == b.mod_ && a.value_ == b.value_;
  }

 private:
  Residue(std::uint64_t v, const Modulus& m, int) : value_(v), mod_(m) {}

  void require_same(const Residue& other) const {
    if (!(mod_ == other.mod_))
      throw UsageError("residue modulus mismatch: " +
                       std::to_string(mod_.value()) + " vs " +
                       std::to_string(other.mod_.value()));
  }

  std::uint64_t value_;
  Modulus mod_;
};

enum class ArithOp { add, sub, mul };

inline Residue res_from_int(std::int64_t x, const Modulus& m) {
  return Residue(x, m);
}

inline Residue res_arith(const Residue& a, const Residue& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
  }
  throw UsageError("unknown arithmetic operation");
}

inline Residue res_inv(const Residue& a) {
  return Residue::canonical(a.modulus().inv(a.value()), a.modulus());
}

inline Residue res_pow(const Residue& a, std::int64_t e) {
  return Residue::canonical(a.modulus().pow_signed(a.value(), e), a.modulus());
}

/// Given X = a (mod p^k) with p | X, returns X/p (mod p^(k-1)).
inline Residue lift_div_p(const Residue& a) {
  const Modulus& m = a.modulus();
  if (m.power() < 2)
    throw UsageError("lift_div_p needs a modulus p^k with k >= 2");
  if (a.value() % m.prime() != 0)
    throw NotDivisible(std::to_string(a.value()) + " mod " +
                       std::to_string(m.value()) + " is not divisible by " +
                       std::to_string(m.prime()));
  return Residue::canonical(a.value() / m.prime(), m.with_power(m.power() - 1));
}

/// Image of a under Z/p^k -> Z/p^j for j <= k.
inline Residue reduce_to(const Residue& a, int power) {
  const Modulus& m = a.modulus();
  if (power > m.power())
    throw UsageError("cannot reduce to a higher power");
  Modulus target = m.with_power(power);
  return Residue::canonical(a.value() % target.value(), target);
}

}  // namespace hlv
