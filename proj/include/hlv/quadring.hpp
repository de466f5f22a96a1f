#pragma once

// The ring Z[x]/(x^2 - Ax + B) reduced mod m. Elements are a + b*alpha where
// alpha is the class of x, so alpha^2 = A*alpha - B. This works the same
// whether or not the discriminant is a square mod p.

#include <cstdint>
#include <utility>

#include "hlv/modnum.hpp"
#include "hlv/sequences.hpp"

namespace hlv {

struct QuadElem {
  Residue a;  // rational part
  Residue b;  // coefficient of alpha
  LucasParams params;

  const Modulus& modulus() const noexcept { return a.modulus(); }

  static QuadElem scalar(std::int64_t c, const LucasParams& params, const Modulus& m) {
    return {res_from_int(c, m), res_from_int(0, m), params};
  }
  static QuadElem alpha(const LucasParams& params, const Modulus& m) {
    return {res_from_int(0, m), res_from_int(1, m), params};
  }
  /// beta = A - alpha
  static QuadElem beta(const LucasParams& params, const Modulus& m) {
    return {res_from_int(params.A, m), res_from_int(-1, m), params};
  }
  /// sqrt(Delta) = alpha - beta = 2 alpha - A
  static QuadElem sqrt_delta(const LucasParams& params, const Modulus& m) {
    return {res_from_int(-params.A, m), res_from_int(2, m), params};
  }

  friend bool operator==(const QuadElem& x, const QuadElem& y) {
    return x.params == y.params && x.a == y.a && x.b == y.b;
  }
};

namespace detail {
inline void require_same_ring(const QuadElem& x, const QuadElem& y) {
  if (!(x.params == y.params) || !(x.modulus() == y.modulus()))
    throw UsageError("quadratic ring elements from different rings");
}
}  // namespace detail

inline QuadElem qadd(const QuadElem& x, const QuadElem& y) {
  detail::require_same_ring(x, y);
  return {x.a + y.a, x.b + y.b, x.params};
}

inline QuadElem qsub(const QuadElem& x, const QuadElem& y) {
  detail::require_same_ring(x, y);
  return {x.a - y.a, x.b - y.b, x.params};
}

inline QuadElem qmul(const QuadElem& x, const QuadElem& y) {
  detail::require_same_ring(x, y);
  const Modulus& m = x.modulus();
  const Residue A = res_from_int(x.params.A, m);
  const Residue B = res_from_int(x.params.B, m);
  // (a1 + b1 t)(a2 + b2 t) = a1 a2 + (a1 b2 + a2 b1) t + b1 b2 t^2,  t^2 = A t - B
  const Residue bb = x.b * y.b;
  return {x.a * y.a - bb * B, x.a * y.b + x.b * y.a + bb * A, x.params};
}

inline QuadElem qpow(QuadElem x, std::uint64_t e) {
  QuadElem r = QuadElem::scalar(1, x.params, x.modulus());
  while (e) {
    if (e & 1) r = qmul(r, x);
    x = qmul(x, x);
    e >>= 1;
  }
  return r;
}

/// The Galois conjugate: alpha <-> beta, i.e. a + b alpha -> (a + bA) - b alpha.
inline QuadElem qconj(const QuadElem& x) {
  const Residue A = res_from_int(x.params.A, x.modulus());
  return {x.a + x.b * A, -x.b, x.params};
}

/// For x = alpha^n returns (v_n, u_n): trace = x + conj(x) = 2a + bA, ucoef = b.
inline std::pair<Residue, Residue> trace_and_ucoef(const QuadElem& x) {
  const Modulus& m = x.modulus();
  return {res_from_int(2, m) * x.a + x.b * res_from_int(x.params.A, m), x.b};
}

}  // namespace hlv
