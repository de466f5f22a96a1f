#pragma once

// Per-prime tables: harmonic numbers, Lucas sequences, binomial rows and
// central binomials with their p-adic valuation split off.

#include <algorithm>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hlv/modnum.hpp"
#include "hlv/primes.hpp"

namespace hlv {

/// Parameters (A, B) of the recurrence x_{n+1} = A x_n - B x_{n-1}.
struct LucasParams {
  std::int64_t A;
  std::int64_t B;
  std::int64_t delta;

  LucasParams(std::int64_t a, std::int64_t b) : A(a), B(b), delta(a * a - 4 * b) {
    constexpr std::int64_t bound = std::int64_t{1} << 30;
    if (a <= -bound || a >= bound || b <= -bound || b >= bound)
      throw UsageError("Lucas parameters must satisfy |A|, |B| < 2^30");
  }

  friend bool operator==(const LucasParams& x, const LucasParams& y) noexcept {
    return x.A == y.A && x.B == y.B;
  }
};

/// Modular inverses of every entry of xs with a single extended gcd.
/// Throws NotInvertible if any entry shares a factor with the modulus.
inline std::vector<std::uint64_t> batch_inverse(std::span<const std::uint64_t> xs,
                                                const Modulus& mod) {
  std::vector<std::uint64_t> prefix(xs.size());
  std::uint64_t acc = 1 % mod.value();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    prefix[i] = acc;
    acc = mod.mul(acc, xs[i]);
  }
  std::uint64_t inv_acc = mod.inv(acc);
  std::vector<std::uint64_t> out(xs.size());
  for (std::size_t i = xs.size(); i-- > 0;) {
    out[i] = mod.mul(inv_acc, prefix[i]);
    inv_acc = mod.mul(inv_acc, xs[i]);
  }
  return out;
}

/// H_j and H_j^(2) for 0 <= j <= p-1, plus the inverses 1/j used to build them.
struct HarmonicTable {
  Modulus modulus;
  std::vector<std::uint64_t> inverses;  // inverses[0] is unused (0)
  std::vector<std::uint64_t> h;
  std::vector<std::uint64_t> h2;  // empty unless requested

  Residue H(std::size_t j) const { return Residue::canonical(h.at(j), modulus); }
  Residue H2(std::size_t j) const { return Residue::canonical(h2.at(j), modulus); }
};

inline HarmonicTable harmonic_table(std::uint64_t p, int k, bool second_order = false) {
  Modulus mod(p, k);
  std::vector<std::uint64_t> ks(p - 1);
  for (std::uint64_t j = 1; j < p; ++j) ks[j - 1] = j;
  auto inv = batch_inverse(ks, mod);

  HarmonicTable t{mod, std::vector<std::uint64_t>(p, 0), std::vector<std::uint64_t>(p, 0), {}};
  for (std::uint64_t j = 1; j < p; ++j) {
    t.inverses[j] = inv[j - 1];
    t.h[j] = mod.add(t.h[j - 1], t.inverses[j]);
  }
  if (second_order) {
    t.h2.assign(p, 0);
    for (std::uint64_t j = 1; j < p; ++j)
      t.h2[j] = mod.add(t.h2[j - 1], mod.mul(t.inverses[j], t.inverses[j]));
  }
  return t;
}

struct LucasTable {
  Modulus modulus;
  std::vector<std::uint64_t> u;
  std::vector<std::uint64_t> v;

  Residue U(std::size_t n) const { return Residue::canonical(u.at(n), modulus); }
  Residue V(std::size_t n) const { return Residue::canonical(v.at(n), modulus); }
};

/// u_n(A,B) and v_n(A,B) for 0 <= n < len.
inline LucasTable lucas_table(const LucasParams& params, const Modulus& mod,
                              std::size_t len) {
  if (len < 2) throw UsageError("lucas_table needs len >= 2");
  const std::uint64_t a = mod.reduce(params.A);
  const std::uint64_t b = mod.reduce(params.B);
  LucasTable t{mod, std::vector<std::uint64_t>(len), std::vector<std::uint64_t>(len)};
  t.u[0] = 0;
  t.u[1] = 1 % mod.value();
  t.v[0] = 2 % mod.value();
  t.v[1] = a;
  for (std::size_t n = 1; n + 1 < len; ++n) {
    t.u[n + 1] = mod.sub(mod.mul(a, t.u[n]), mod.mul(b, t.u[n - 1]));
    t.v[n + 1] = mod.sub(mod.mul(a, t.v[n]), mod.mul(b, t.v[n - 1]));
  }
  return t;
}

/// Families of Lucas sequences with a known closed form.
enum class ClosedForm {
  neg1_1,      // u_n(-1,1) = (n/3)
  pos1_1,      // u_n(1,1) = (-1)^(n-1) (n/3)
  two_two,     // u_n(2,2), period-4 pattern in powers of -4
  zero_delta,  // A even, B = (A/2)^2: u_n = n (A/2)^(n-1)
};

/// (n/3) as a Legendre symbol: 0, 1, -1 for n = 0, 1, 2 (mod 3).
constexpr int symbol3(std::int64_t n) noexcept {
  const std::int64_t r = ((n % 3) + 3) % 3;
  return r == 0 ? 0 : (r == 1 ? 1 : -1);
}

inline LucasParams closed_form_params(ClosedForm family, std::int64_t even_a = 2) {
  switch (family) {
    case ClosedForm::neg1_1: return {-1, 1};
    case ClosedForm::pos1_1: return {1, 1};
    case ClosedForm::two_two: return {2, 2};
    case ClosedForm::zero_delta:
      if (even_a % 2 != 0) throw UsageError("zero-discriminant family needs even A");
      return {even_a, (even_a / 2) * (even_a / 2)};
  }
  throw UsageError("unknown closed-form family");
}

/// The closed-form value of u_n for the family, reduced mod m.
inline Residue closed_form_value(ClosedForm family, std::uint64_t n, const Modulus& mod,
                                 std::int64_t even_a = 2) {
  switch (family) {
    case ClosedForm::neg1_1:
      return res_from_int(symbol3(static_cast<std::int64_t>(n % 3)), mod);
    case ClosedForm::pos1_1: {
      const int s = symbol3(static_cast<std::int64_t>(n % 3));
      return res_from_int(n % 2 == 1 ? s : -s, mod);
    }
    case ClosedForm::two_two: {
      const Residue pw = res_pow(res_from_int(-4, mod), static_cast<std::int64_t>(n / 4));
      switch (n % 4) {
        case 0: return res_from_int(0, mod);
        case 1: return pw;
        default: return res_from_int(2, mod) * pw;
      }
    }
    case ClosedForm::zero_delta: {
      if (even_a % 2 != 0) throw UsageError("zero-discriminant family needs even A");
      if (n == 0) return res_from_int(0, mod);
      const Residue half = res_from_int(even_a / 2, mod);
      return res_from_int(static_cast<std::int64_t>(n % mod.value()), mod) *
             Residue::canonical(mod.pow(half.value(), n - 1), mod);
    }
  }
  throw UsageError("unknown closed-form family");
}

/// True iff the recurrence value of u_n agrees with the family's closed form mod p^k.
inline bool closed_form_check(ClosedForm family, std::uint64_t n, std::uint64_t p, int k,
                              std::int64_t even_a = 2) {
  Modulus mod(p, k);
  const auto table = lucas_table(closed_form_params(family, even_a), mod,
                                 std::max<std::size_t>(2, n + 1));
  return table.U(n) == closed_form_value(family, n, mod, even_a);
}

/// Row binom(p-1, j) mod p^k for 0 <= j <= p-1.
struct BinomialRow {
  Modulus modulus;
  std::vector<std::uint64_t> c;

  Residue operator[](std::size_t j) const { return Residue::canonical(c.at(j), modulus); }
};

inline BinomialRow binom_row(std::uint64_t p, int k) {
  Modulus mod(p, k);
  std::vector<std::uint64_t> ks(p - 1);
  for (std::uint64_t j = 1; j < p; ++j) ks[j - 1] = j;
  const auto inv = batch_inverse(ks, mod);
  BinomialRow row{mod, std::vector<std::uint64_t>(p)};
  row.c[0] = 1;
  for (std::uint64_t j = 1; j < p; ++j)
    row.c[j] = mod.mul(mod.mul(row.c[j - 1], p - j), inv[j - 1]);
  return row;
}

/// unit * p^exponent, with p not dividing unit.
struct ValuedResidue {
  Residue unit;
  std::uint64_t exponent = 0;

  /// unit * p^exponent reduced mod p^k (zero once exponent >= k).
  Residue collapse() const {
    const Modulus& m = unit.modulus();
    if (exponent >= static_cast<std::uint64_t>(m.power())) return res_from_int(0, m);
    return unit * Residue::canonical(detail::ipow(m.prime(), static_cast<int>(exponent)), m);
  }
  /// Same, at a lower power of p.
  Residue collapse(int power) const {
    return ValuedResidue{reduce_to(unit, power), exponent}.collapse();
  }
};

/// binom(2j, j) for 0 <= j < len as unit * p^e, units mod p^k.
inline std::vector<ValuedResidue> central_binom_table(std::uint64_t p, int k,
                                                      std::size_t len = 0) {
  Modulus mod(p, k);
  if (len == 0) len = p;
  std::vector<ValuedResidue> out;
  out.reserve(len);
  out.push_back({res_from_int(1, mod), 0});
  auto split = [p](std::uint64_t x) {
    std::uint64_t e = 0;
    while (x % p == 0) {
      x /= p;
      ++e;
    }
    return std::pair{x, e};
  };
  for (std::uint64_t j = 0; j + 1 < len; ++j) {
    // binom(2j+2, j+1) = binom(2j, j) * 2(2j+1) / (j+1)
    const auto [num, enum_] = split(2 * (2 * j + 1));
    const auto [den, eden] = split(j + 1);
    const ValuedResidue& prev = out.back();
    const std::uint64_t unit =
        mod.mul(mod.mul(prev.unit.value(), mod.reduce_unsigned(num)),
                mod.inv(mod.reduce_unsigned(den)));
    out.push_back({Residue::canonical(unit, mod), prev.exponent + enum_ - eden});
  }
  return out;
}

/// Both sides of Chu's identity sum_{k=j}^{n} binom(k-1, j-1) = binom(n, j).
inline std::pair<std::uint64_t, std::uint64_t> chu_sum(std::uint64_t n, std::uint64_t j) {
  if (j == 0 || j > n || n > 64)
    throw UsageError("chu_sum needs 0 < j <= n <= 64");
  auto binom = [](std::uint64_t a, std::uint64_t b) {
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return static_cast<std::uint64_t>(r);
  };
  std::uint64_t lhs = 0;
  for (std::uint64_t k = j; k <= n; ++k) lhs += binom(k - 1, j - 1);
  return {lhs, binom(n, j)};
}

}  // namespace hlv
