#pragma once

// Executable catalog of harmonic-number / Lucas-sequence congruences.
//
// Each check is identified by a dotted id (e.g. "thm1.3", "conj1.2.c").
// A check has an applicability gate on (p, params) and a body that
// computes both sides of the congruence at the stated modulus. Results
// with status skip are produced exactly when the gate rejects.
//
// Checks that assert an identity for every index ("for all k") report the
// first mismatching index when there is one, and otherwise the sums of
// both sides over all indices.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hlv/modnum.hpp"
#include "hlv/primes.hpp"
#include "hlv/quadring.hpp"
#include "hlv/sequences.hpp"

namespace hlv {

enum class CheckKind { theorem, corollary, lemma, identity, conjecture };

inline std::string_view to_string(CheckKind k) {
  switch (k) {
    case CheckKind::theorem: return "theorem";
    case CheckKind::corollary: return "corollary";
    case CheckKind::lemma: return "lemma";
    case CheckKind::identity: return "identity";
    case CheckKind::conjecture: return "conjecture";
  }
  return "?";
}

/// Which parameters a check consumes.
enum class ParamShape {
  none,
  pair,    // A, B
  pair_n,  // A, B, n
  n,       // n
  even_a,  // A even, B = (A/2)^2 implied
};

enum class Status { pass, fail, skip };

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skip: return "skip";
  }
  return "?";
}

struct Params {
  std::optional<std::int64_t> A;
  std::optional<std::int64_t> B;
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> b;

  friend auto operator<=>(const Params&, const Params&) = default;
};

struct CheckResult {
  std::string id;
  std::uint64_t prime;
  Params params;
  Residue lhs;
  Residue rhs;
  Residue residual;
  Status status;
  std::int64_t elapsed_us = 0;
  std::string note;
  bool flagged = false;

  std::uint64_t modulus() const noexcept { return lhs.modulus().value(); }
};

/// Lazily built per-prime tables shared by all checks at one prime.
/// Not thread-safe; use one workspace per thread.
class Workspace {
 public:
  explicit Workspace(std::uint64_t p) : p_(p), mods_{Modulus(p, 1), Modulus(p, 2), Modulus(p, 3)} {}

  std::uint64_t prime() const noexcept { return p_; }
  const Modulus& mod(int k) const { return mods_.at(static_cast<std::size_t>(k - 1)); }

  /// H_j, H_j^(2) and 1/j modulo p^2.
  const HarmonicTable& harmonic() {
    if (!harmonic_) harmonic_ = harmonic_table(p_, 2, true);
    return *harmonic_;
  }

  /// H_j^n modulo p^2 for j < p.
  const std::vector<std::uint64_t>& harmonic_powers(std::uint64_t n) {
    auto it = hpow_.find(n);
    if (it != hpow_.end()) return it->second;
    const auto& h = harmonic().h;
    const Modulus& m = mod(2);
    std::vector<std::uint64_t> out(h.size());
    for (std::size_t j = 0; j < h.size(); ++j) out[j] = m.pow(h[j], n);
    return hpow_.emplace(n, std::move(out)).first->second;
  }

  /// binom(p-1, j) modulo p^k, k in {2, 3}.
  const BinomialRow& binomials(int k) {
    auto& slot = k == 3 ? binom3_ : binom2_;
    if (!slot) slot = binom_row(p_, k);
    return *slot;
  }

  /// binom(2j, j) for j < p with units modulo p^3.
  const std::vector<ValuedResidue>& central_binomials() {
    if (!central_) central_ = central_binom_table(p_, 3);
    return *central_;
  }

  /// u_n, v_n modulo p^k for n < max(len, p + 2).
  const LucasTable& lucas(std::int64_t A, std::int64_t B, int k, std::size_t len = 0) {
    len = std::max<std::size_t>(len, p_ + 2);
    for (const auto& e : lucas_)
      if (e.A == A && e.B == B && e.k == k && e.table.u.size() >= len) return e.table;
    lucas_.push_back({A, B, k, lucas_table(LucasParams(A, B), mod(k), len)});
    return lucas_.back().table;
  }

  void drop_lucas() { lucas_.clear(); }

 private:
  struct LucasEntry {
    std::int64_t A, B;
    int k;
    LucasTable table;
  };

  std::uint64_t p_;
  std::array<Modulus, 3> mods_;
  std::optional<HarmonicTable> harmonic_;
  std::map<std::uint64_t, std::vector<std::uint64_t>> hpow_;
  std::optional<BinomialRow> binom2_, binom3_;
  std::optional<std::vector<ValuedResidue>> central_;
  std::deque<LucasEntry> lucas_;
};

/// One evaluated congruence before it is stamped with id and status.
struct Outcome {
  Residue lhs;
  Residue rhs;
  Params params{};
  std::string note{};
  bool flagged = false;  // outside the stated scope of the result, tested anyway
};

using Gate = std::optional<std::string> (*)(std::uint64_t p, const Params&);
using Body = std::vector<Outcome> (*)(Workspace&, const Params&);

struct CheckInfo {
  std::string_view id;
  CheckKind kind;
  ParamShape shape;
  int power;  // the congruence holds modulo p^power
  std::string_view statement;
  Gate gate;
  Body body;
  std::vector<std::pair<std::int64_t, std::int64_t>> default_pairs{};
};

namespace checks {

using Outcomes = std::vector<Outcome>;
using u64 = std::uint64_t;
using i64 = std::int64_t;

inline Residue at(const Modulus& m, u64 v) { return Residue::canonical(v, m); }
inline Residue zero(const Modulus& m) { return res_from_int(0, m); }
inline Residue mod_p(const Residue& x) { return reduce_to(x, 1); }
inline i64 sp(u64 p) { return static_cast<i64>(p); }

/// Runs f(i) -> (lhs, rhs) over i < count; reports the first mismatch, or the sums.
template <class F>
Outcome pointwise(const Modulus& m, u64 count, F f) {
  u64 sl = 0, sr = 0;
  for (u64 i = 0; i < count; ++i) {
    auto [l, r] = f(i);
    if (l != r) return {at(m, l), at(m, r), {}, "first mismatch at index " + std::to_string(i)};
    sl = m.add(sl, l);
    sr = m.add(sr, r);
  }
  return {at(m, sl), at(m, sr)};
}

// ---- gates ----

inline std::optional<std::string> always(u64, const Params&) { return std::nullopt; }

inline std::optional<std::string> above5(u64 p, const Params&) {
  if (p > 5) return std::nullopt;
  return "needs p > 5";
}

inline std::optional<std::string> a_unit(u64 p, const Params& q) {
  if (*q.A % sp(p) != 0) return std::nullopt;
  return "p divides A";
}

inline std::optional<std::string> b_unit_delta_square(u64 p, const Params& q) {
  if (*q.B % sp(p) == 0) return "p divides B";
  if (jacobi(LucasParams(*q.A, *q.B).delta, sp(p)) != 1) return "(Delta/p) != 1";
  return std::nullopt;
}

inline std::optional<std::string> p_pm1_mod5(u64 p, const Params&) {
  if (p % 5 == 1 || p % 5 == 4) return std::nullopt;
  return "needs p = +-1 (mod 5)";
}

inline std::optional<std::string> p3_mod4(u64 p, const Params&) {
  if (p % 4 == 3) return std::nullopt;
  return "needs p = 3 (mod 4)";
}

inline std::optional<std::string> b_delta_units(u64 p, const Params& q) {
  if (*q.B % sp(p) == 0) return "p divides B";
  if (jacobi(LucasParams(*q.A, *q.B).delta, sp(p)) == 0) return "p divides Delta";
  return std::nullopt;
}

inline std::optional<std::string> b_square_delta_unit(u64 p, const Params& q) {
  if (jacobi(*q.B, sp(p)) != 1) return "(B/p) != 1";
  if (jacobi(LucasParams(*q.A, *q.B).delta, sp(p)) == 0) return "p divides Delta";
  return std::nullopt;
}

inline std::optional<std::string> even_a(u64, const Params& q) {
  if (*q.A % 2 == 0) return std::nullopt;
  return "A must be even";
}

template <u64 M, u64... R>
std::optional<std::string> residue_class(u64 p, const Params&) {
  if (((p % M == R) || ...)) return std::nullopt;
  std::string why = "needs p mod " + std::to_string(M) + " in {";
  bool first = true;
  for (u64 r : {R...}) {
    why += (first ? "" : ",") + std::to_string(r);
    first = false;
  }
  return why + "}";
}

// ---- harmonic congruences ----

inline Outcomes wolstenholme(Workspace& ws, const Params&) {
  const auto& H = ws.harmonic();
  return {{H.H(ws.prime() - 1), zero(ws.mod(2))}};
}

inline Outcomes su_h2(Workspace& ws, const Params&) {
  const Modulus& m = ws.mod(2);
  const auto& H = ws.harmonic();
  u64 s = 0;
  for (u64 k = 1; k < ws.prime(); ++k) s = m.add(s, m.mul(H.h[k], H.h[k]));
  return {{at(m, s), res_from_int(2 * sp(ws.prime()) - 2, m)}};
}

inline Outcomes su_h3(Workspace& ws, const Params&) {
  const Modulus& m = ws.mod(2);
  const auto& H = ws.harmonic();
  u64 s = 0;
  for (u64 k = 1; k < ws.prime(); ++k) s = m.add(s, m.mul(m.mul(H.h[k], H.h[k]), H.h[k]));
  return {{mod_p(at(m, s)), res_from_int(6, ws.mod(1))}};
}

inline Outcomes su_h2k2(Workspace& ws, const Params&) {
  const Modulus& m = ws.mod(2);
  const auto& H = ws.harmonic();
  u64 s = 0;
  for (u64 k = 1; k < ws.prime(); ++k) {
    const u64 t = m.mul(H.h[k], H.inverses[k]);
    s = m.add(s, m.mul(t, t));
  }
  return {{mod_p(at(m, s)), zero(ws.mod(1))}};
}

inline std::string discriminant_note(u64 p, const Params& q) {
  const i64 d = LucasParams(*q.A, *q.B).delta;
  if (d != 0 && d % sp(p) == 0) return "p | Delta != 0";
  return {};
}

inline Outcomes thm11_v(Workspace& ws, const Params& q) {
  const Modulus& m = ws.mod(2);
  const auto& H = ws.harmonic();
  const auto& L = ws.lucas(*q.A, *q.B, 2);
  const u64 ainv = m.inv(m.reduce(*q.A));
  u64 w = 1, s = 0;
  for (u64 k = 1; k < ws.prime(); ++k) {
    w = m.mul(w, ainv);
    s = m.add(s, m.mul(m.mul(L.v[k], H.h[k]), m.mul(H.inverses[k], w)));
  }
  const std::string note = discriminant_note(ws.prime(), q);
  return {{mod_p(at(m, s)), zero(ws.mod(1)), {}, note, !note.empty()}};
}

inline Outcomes thm11_u(Workspace& ws, const Params& q) {
  const Modulus& m = ws.mod(2);
  const auto& H = ws.harmonic();
  const auto& L = ws.lucas(*q.A, *q.B, 2);
  const u64 ainv = m.inv(m.reduce(*q.A));
  u64 w = 1, lhs = 0, plain = 0;
  for (u64 k = 1; k < ws.prime(); ++k) {
    w = m.mul(w, ainv);
    const u64 t = m.mul(L.u[k], m.mul(H.inverses[k], w));
    lhs = m.add(lhs, m.mul(t, H.h[k]));
    plain = m.add(plain, t);
  }
  std::string note = discriminant_note(ws.prime(), q);
  const bool flagged = !note.empty();
  if (plain % ws.prime() != 0) {
    // the right-hand side is not p-integral: report sum u_k/(kA^k) mod p against 0
    if (flagged) note += "; ";
    return {{mod_p(at(m, plain)), zero(ws.mod(1)), {},
             note + "sum u_k/(kA^k) not divisible by p", flagged}};
  }
  const Residue rhs = res_from_int(2, ws.mod(1)) * lift_div_p(at(m, plain));
  return {{mod_p(at(m, lhs)), rhs, {}, note, flagged}};
}

inline Outcomes cor11(Workspace& ws, const Params&) {
  const Modulus& m = ws.mod(2);
  const auto& H = ws.harmonic();
  const u64 half = m.inv(2);
  u64 w = 1, s = 0;
  for (u64 k = 1; k < ws.prime(); ++k) {
    w = m.mul(w, half);
    s = m.add(s, m.mul(H.h[k], m.mul(H.inverses[k], w)));
  }
  return {{mod_p(at(m, s)), zero(ws.mod(1))}};
}

template <bool UseV>
Outcomes thm12(Workspace& ws, const Params& q) {
  const Modulus& m = ws.mod(2);
  const auto& L = ws.lucas(*q.A, *q.B, 2);
  const auto& seq = UseV ? L.v : L.u;
  const u64 binv = m.inv(m.reduce(*q.B));
  const auto& hn = ws.harmonic_powers(static_cast<u64>(*q.n));
  u64 w = 1, s = 0;  // w = B^-k
  for (u64 k = 0; k < ws.prime(); ++k) {
    const u64 factor = UseV ? m.sub(1, w) : m.add(1, w);
    s = m.add(s, m.mul(m.mul(factor, seq[k]), hn[k]));
    w = m.mul(w, binv);
  }
  return {{mod_p(at(m, s)), zero(ws.mod(1))}};
}

/// 0: sum F_{2k} H_k^n;  1: sum over even k of F_k H_k^n;  2: sum over odd k of L_k H_k^n.
template <int Which>
Outcomes cor13(Workspace& ws, const Params& q) {
  const Modulus& m = ws.mod(2);
  const u64 p = ws.prime();
  const auto& fib = ws.lucas(1, -1, 2, 2 * p);
  const auto& hn = ws.harmonic_powers(static_cast<u64>(*q.n));
  u64 s = 0;
  for (u64 k = 0; k < p; ++k) {
    u64 term = 0;
    if constexpr (Which == 0) term = fib.u[2 * k];
    if constexpr (Which == 1) term = k % 2 == 0 ? fib.u[k] : 0;
    if constexpr (Which == 2) term = k % 2 == 1 ? fib.v[k] : 0;
    if (term) s = m.add(s, m.mul(term, hn[k]));
  }
  return {{mod_p(at(m, s)), zero(ws.mod(1))}};
}

inline u64 signed_unit(const Modulus& m, int s) { return m.reduce(s); }

inline Outcomes eq16(Workspace& ws, const Params&) {
  const Modulus& m = ws.mod(2);
  const auto& H = ws.harmonic();
  u64 s = 0;
  for (u64 k = 0; k < ws.prime(); ++k) {
    const int sign = (k % 2 ? -1 : 1) * symbol3(sp(k));
    s = m.add(s, m.mul(signed_unit(m, sign), H.h[k]));
  }
  return {{mod_p(at(m, s)), zero(ws.mod(1))}};
}

inline Outcomes eq17(Workspace& ws, const Params&) {
  const Modulus& m = ws.mod(2);
  const u64 p = ws.prime();
  const auto& H = ws.harmonic();
  u64 s = 0;
  for (u64 k = 0; k < p; ++k) s = m.add(s, m.mul(signed_unit(m, symbol3(sp(k))), H.h[k]));
  const Modulus& m1 = ws.mod(1);
  const Residue rhs = res_from_int(symbol3(sp(p)) - 1, m1) * res_inv(res_from_int(4, m1)) *
                      fermat_quotient(3, p);
  return {{mod_p(at(m, s)), rhs}};
}

inline Outcomes eq18(Workspace& ws, const Params&) {
  const Modulus& m = ws.mod(2);
  const u64 p = ws.prime();
  const auto& H = ws.harmonic();
  u64 s = 0;
  for (u64 k = 0; k < p; ++k) {
    const int sign = (k % 2 ? -1 : 1) * symbol3(sp(k));
    s = m.add(s, m.mul(m.mul(signed_unit(m, sign), k), H.h[k]));
  }
  const Modulus& m1 = ws.mod(1);
  const Residue rhs = res_from_int(1 - symbol3(sp(p)), m1) * res_inv(res_from_int(2, m1));
  return {{mod_p(at(m, s)), rhs}};
}

inline Outcomes eq19(Workspace& ws, const Params&) {
  const Modulus& m = ws.mod(2);
  const auto& H = ws.harmonic();
  const auto& L = ws.lucas(2, 2, 2);
  const u64 half = m.inv(2);
  u64 w = 1, s = 0;
  for (u64 k = 0; k < ws.prime(); ++k) {
    s = m.add(s, m.mul(m.mul(m.add(1, w), L.u[k]), H.h[k]));
    w = m.mul(w, half);
  }
  return {{mod_p(at(m, s)), zero(ws.mod(1))}};
}

inline int symbol15(u64 p) { return jacobi(sp(p), 15); }

inline Outcomes thm13(Workspace& ws, const Params&) {
  const Modulus& m = ws.mod(2);
  const u64 p = ws.prime();
  const auto& H = ws.harmonic();
  const auto& L = ws.lucas(1, 4, 2);
  const u64 delta = symbol15(p) == 1 ? 0 : 1;
  const u64 half = m.inv(2);
  u64 w = 1, s = 0;
  for (u64 k = 0; k < p; ++k) {
    s = m.add(s, m.mul(m.mul(L.u[k + delta], w), H.h[k]));
    w = m.mul(w, half);
  }
  return {{mod_p(at(m, s)), zero(ws.mod(1)), {}, "delta=" + std::to_string(delta)}};
}

// ---- identities from the proofs ----

inline Outcomes eq21(Workspace& ws, const Params&) {
  const Modulus& m = ws.mod(2);
  const u64 p = ws.prime();
  const auto& H = ws.harmonic();
  const auto& C = ws.binomials(2);
  return {pointwise(m, p, [&](u64 k) {
    const u64 lhs = k % 2 ? m.neg(C.c[k]) : C.c[k];
    return std::pair{lhs, m.sub(1, m.mul(p, H.h[k]))};
  })};
}

inline Outcomes eq23(Workspace& ws, const Params&) {
  const Modulus& m = ws.mod(2);
  const u64 p = ws.prime();
  const auto& C = ws.binomials(2);
  const auto& L = ws.lucas(2, 2, 2);
  const u64 half = m.inv(2);
  u64 w = 1, s = 0;
  for (u64 k = 0; k < p; ++k) {
    u64 t = m.mul(m.mul(C.c[k], m.add(w, 1)), L.u[k]);
    s = m.add(s, k % 2 ? m.neg(t) : t);
    w = m.mul(w, half);
  }
  const i64 sign = ((p + 1) / 4) % 2 ? -1 : 1;
  const u64 rhs = m.mul(m.reduce(sign), m.pow(half, (p - 1) / 2));
  return {{at(m, s), at(m, rhs)}};
}

inline Outcomes eq24(Workspace& ws, const Params&) {
  const Modulus& m = ws.mod(2);
  const u64 p = ws.prime();
  const auto& L = ws.lucas(2, 2, 2);
  const u64 half = m.inv(2);
  u64 w = 1, s = 0;
  for (u64 k = 0; k < p; ++k) {
    s = m.add(s, m.mul(m.add(w, 1), L.u[k]));
    w = m.mul(w, half);
  }
  const i64 sign = ((p + 1) / 4) % 2 ? -1 : 1;
  const u64 rhs = m.sub(2, m.mul(m.reduce(sign), m.pow(2, (p - 1) / 2)));
  return {{at(m, s), at(m, rhs)}};
}

inline Outcomes companion(Workspace& ws, const Params& q) {
  const Modulus& m = ws.mod(2);
  const auto& L = ws.lucas(*q.A, *q.B, 2);
  const u64 a = m.reduce(*q.A);
  return {pointwise(m, ws.prime() + 1, [&](u64 n) {
    return std::pair{m.add(m.mul(a, L.u[n]), L.v[n]), m.mul(2, L.u[n + 1])};
  })};
}

inline Outcomes doubling(Workspace& ws, const Params& q) {
  const Modulus& m = ws.mod(2);
  const auto& L = ws.lucas(*q.A, *q.B, 2);
  return {pointwise(m, (ws.prime() + 1) / 2 + 1, [&](u64 n) {
    return std::pair{L.u[2 * n], m.mul(L.u[n], L.v[n])};
  })};
}

template <ClosedForm Family>
Outcomes closed(Workspace& ws, const Params& q) {
  const Modulus& m = ws.mod(2);
  const i64 a = Family == ClosedForm::zero_delta ? *q.A : 2;
  const LucasParams lp = closed_form_params(Family, a);
  const auto& L = ws.lucas(lp.A, lp.B, 2);
  Outcome o = [&] {
  if constexpr (Family == ClosedForm::zero_delta) {
    // n (A/2)^(n-1), with the power carried along instead of recomputed
    const u64 half = m.reduce(a / 2);
    u64 w = 0;  // (A/2)^(n-1), taken as 0 at n = 0 where the factor n vanishes
    return pointwise(m, ws.prime() + 2, [&](u64 n) {
      w = n <= 1 ? 1 : m.mul(w, half);
      return std::pair{L.u[n], m.mul(m.reduce_unsigned(n), w)};
    });
  } else {
    return pointwise(m, ws.prime() + 2, [&](u64 n) {
      return std::pair{L.u[n], closed_form_value(Family, n, m, a).value()};
    });
  }
  }();
  if constexpr (Family == ClosedForm::zero_delta) o.params = {a, lp.B, std::nullopt, std::nullopt};
  return {o};
}

// ---- lemmas ----

/// Parts: 0 alpha scalar, 1 alpha irrational, 2 beta scalar, 3 beta irrational.
template <int Part>
Outcomes lemma22(Workspace& ws, const Params& q) {
  const Modulus& m = ws.mod(1);
  const u64 p = ws.prime();
  const LucasParams lp(*q.A, *q.B);
  const int d = jacobi(lp.delta, sp(p));
  const QuadElem x = qpow(QuadElem::alpha(lp, m), d == 1 ? p - 1 : p + 1);
  const QuadElem y = Part >= 2 ? qconj(x) : x;
  const Residue expect = d == 1 ? res_from_int(1, m) : res_from_int(lp.B, m);
  if constexpr (Part % 2 == 0)
    return {{y.a, expect}};
  else
    return {{y.b, zero(m)}};
}

/// Part 0: u_{(p-1)/2};  part 1: u_{(p+1)/2}. Evaluated for each square root b of B.
template <int Part>
Outcomes lemma31(Workspace& ws, const Params& q) {
  const Modulus& m = ws.mod(1);
  const u64 p = ws.prime();
  const LucasParams lp(*q.A, *q.B);
  const Residue bres = res_from_int(lp.B, m);
  std::vector<u64> roots;
  if (q.b) {
    const Residue b = res_from_int(*q.b, m);
    if (!(b * b == bres)) throw UsageError("b^2 != B (mod p)");
    roots.push_back(b.value());
  } else {
    const u64 r = sqrt_mod(bres).value();
    roots = {r, p - r};
  }
  const int d = jacobi(lp.delta, sp(p));
  const auto& L = ws.lucas(lp.A, lp.B, 2);
  const u64 idx = Part == 0 ? (p - 1) / 2 : (p + 1) / 2;
  const Residue lhs = mod_p(L.U(idx));
  Outcomes out;
  for (u64 b : roots) {
    const int s = jacobi(lp.A - 2 * static_cast<i64>(b), sp(p));
    Residue rhs = zero(m);
    if (Part == 0 && d == -1) rhs = res_inv(at(m, b)) * res_from_int(s, m);
    if (Part == 1 && d == 1) rhs = res_from_int(s, m);
    out.push_back({lhs, rhs, {lp.A, lp.B, std::nullopt, static_cast<i64>(b)}});
  }
  return out;
}

inline Outcomes lemma32(Workspace& ws, const Params&) {
  const Modulus& m = ws.mod(2);
  const u64 p = ws.prime();
  const auto& L = ws.lucas(1, 4, 2);
  const int e = symbol15(p);
  const Residue two = res_from_int(2, m);
  const Residue lhs = L.U(p) - res_pow(two, sp(p) - 1) * res_from_int(e, m);
  const Residue rhs = res_pow(two, e - 2) * L.U(static_cast<u64>(sp(p) - e));
  return {{lhs, rhs}};
}

template <int Part>
Outcomes eq34(Workspace& ws, const Params&) {
  const Modulus& m = ws.mod(1);
  const u64 p = ws.prime();
  const auto& L = ws.lucas(1, 4, 2);
  const i64 e = symbol15(p);
  if constexpr (Part == 0) {
    return {{mod_p(L.U(static_cast<u64>((sp(p) - e) / 2))), zero(m)}};
  } else {
    const Residue rhs = res_from_int(jacobi(-3, sp(p)), m) * res_pow(res_from_int(2, m), (e - 1) / 2);
    return {{mod_p(L.U(static_cast<u64>((sp(p) + e) / 2))), rhs}};
  }
}

// ---- conjectures ----

inline Outcomes conj11a(Workspace& ws, const Params&) {
  const Modulus& m = ws.mod(1);
  const u64 p = ws.prime();
  const auto& H = ws.harmonic();
  const auto& cb = ws.central_binomials();
  const u64 minus2 = m.reduce(-2);
  u64 w = 1, s = 0;
  for (u64 k = 0; k < p; ++k) {
    s = m.add(s, m.mul(m.mul(w, cb[k].collapse(1).value()), H.h2[k] % p));
    w = m.mul(w, minus2);
  }
  const Residue q2 = fermat_quotient(2, p);
  const Residue rhs = res_from_int(2, m) * res_inv(res_from_int(3, m)) * q2 * q2;
  return {{at(m, s), rhs}};
}

inline Outcomes conj11b(Workspace& ws, const Params&) {
  const Modulus& m = ws.mod(1);
  const u64 p = ws.prime();
  const auto& H = ws.harmonic();
  const auto& cb = ws.central_binomials();
  u64 s = 0;
  for (u64 k = 0; k < p; ++k) {
    const u64 t = m.mul(cb[k].collapse(1).value(), H.h2[k] % p);
    s = k % 2 ? m.sub(s, t) : m.add(s, t);
  }
  const int e = jacobi(sp(p), 5);
  const Residue f = ws.lucas(1, -1, 2).U(static_cast<u64>(sp(p) - e));
  if (f.value() % p != 0)
    return {{mod_p(f), zero(m), {}, "F_{p-(p/5)} not divisible by p"}};
  const Residue t = lift_div_p(f);
  const Residue rhs = res_from_int(5 * e, m) * res_inv(res_from_int(2, m)) * t * t;
  return {{at(m, s), rhs}};
}

/// sum_{k<p} seq_k / w^k * binom(2k,k)^2 mod p.
inline Outcomes conj12_sum(Workspace& ws, i64 A, i64 B, bool use_v, i64 w) {
  const Modulus& m = ws.mod(1);
  const u64 p = ws.prime();
  const auto& cb = ws.central_binomials();
  const auto& L = ws.lucas(A, B, 2);
  const auto& seq = use_v ? L.v : L.u;
  const u64 winv = m.inv(m.reduce(w));
  u64 pw = 1, s = 0;
  for (u64 k = 0; k < p; ++k) {
    const u64 c = cb[k].collapse(1).value();
    s = m.add(s, m.mul(m.mul(seq[k] % p, pw), m.mul(c, c)));
    pw = m.mul(pw, winv);
  }
  return {{at(m, s), zero(m)}};
}

template <i64 A, i64 B, bool UseV, i64 W>
Outcomes conj12(Workspace& ws, const Params&) {
  return conj12_sum(ws, A, B, UseV, W);
}

inline Outcomes conj13a(Workspace& ws, const Params&) {
  const Modulus& m = ws.mod(3);
  const u64 p = ws.prime();
  const auto& C = ws.binomials(3);
  const auto& cb = ws.central_binomials();
  const u64 inv_m3 = m.inv(m.reduce(-3));
  u64 w = 1, s = 0;
  for (u64 k = 0; k < p; ++k) {
    const u64 sign = k % 2 ? m.reduce(-1) : 1;
    const u64 t = m.mul(m.mul(C.c[k], cb[k].collapse().value()), m.sub(sign, w));
    s = m.add(s, t);
    w = m.mul(w, inv_m3);
  }
  const u64 rhs = m.mul(m.reduce(symbol3(sp(p))), m.sub(m.pow(3, p - 1), 1));
  return {{at(m, s), at(m, rhs)}};
}

/// sum binom(p-1,k) binom(2k,k) u_k(A,B) / w^k  vs  (-1)^((p-1)/2) u_{p-1}(A,B), mod p^3.
template <i64 A, i64 B, i64 W>
Outcomes conj13_lucas(Workspace& ws, const Params&) {
  const Modulus& m = ws.mod(3);
  const u64 p = ws.prime();
  const auto& C = ws.binomials(3);
  const auto& cb = ws.central_binomials();
  const auto& L = ws.lucas(A, B, 3);
  const u64 winv = m.inv(m.reduce(W));
  u64 w = 1, s = 0;
  for (u64 k = 0; k < p; ++k) {
    s = m.add(s, m.mul(m.mul(C.c[k], cb[k].collapse().value()), m.mul(L.u[k], w)));
    w = m.mul(w, winv);
  }
  const u64 rhs = ((p - 1) / 2) % 2 ? m.neg(L.u[p - 1]) : L.u[p - 1];
  return {{at(m, s), at(m, rhs)}};
}

}  // namespace checks

/// The full catalog, in a fixed order.
inline const std::vector<CheckInfo>& catalog() {
  using namespace checks;
  using K = CheckKind;
  using S = ParamShape;
  static const std::vector<std::pair<i64, i64>> thm11_pairs{{1, -1}, {2, 1}, {3, 1}, {4, 4},
                                                           {1, 4},  {2, 2}, {-3, 5}};
  static const std::vector<std::pair<i64, i64>> thm12_pairs{{1, -1}, {3, 1}, {1, 1},
                                                           {-1, 1}, {2, 2}, {4, 1}};
  static const std::vector<std::pair<i64, i64>> lemma22_pairs{{1, -1}, {2, 3}, {1, 4}, {3, 1}, {2, 2}};
  static const std::vector<std::pair<i64, i64>> lemma31_pairs{{1, -1}, {1, 4}, {3, 1}, {2, 2}, {4, 1}};
  static const std::vector<std::pair<i64, i64>> lucas_pairs{{1, -1}, {1, 4}, {2, 2}, {3, -5}};
  static const std::vector<std::pair<i64, i64>> even_as{{2, 0}, {4, 0}, {-6, 0}};

  static const std::vector<CheckInfo> table{
      {"wolstenholme", K::theorem, S::none, 2, "H_{p-1} = 0 (mod p^2)", always, wolstenholme},
      {"su.h2", K::theorem, S::none, 2, "sum_{k=1}^{p-1} H_k^2 = 2p-2 (mod p^2)", always, su_h2},
      {"su.h3", K::theorem, S::none, 1, "sum_{k=1}^{p-1} H_k^3 = 6 (mod p)", always, su_h3},
      {"su.h2k2", K::theorem, S::none, 1, "sum_{k=1}^{p-1} H_k^2/k^2 = 0 (mod p), p > 5", above5, su_h2k2},
      {"thm1.1.v", K::theorem, S::pair, 1, "sum_{k=1}^{p-1} v_k H_k/(k A^k) = 0 (mod p)", a_unit, thm11_v,
       thm11_pairs},
      {"thm1.1.u", K::theorem, S::pair, 1,
       "sum_{k=1}^{p-1} u_k H_k/(k A^k) = (2/p) sum_{k=1}^{p-1} u_k/(k A^k) (mod p)", a_unit, thm11_u,
       thm11_pairs},
      {"cor1.1", K::corollary, S::none, 1, "sum_{k=1}^{p-1} H_k/(k 2^k) = 0 (mod p)", always, cor11},
      {"thm1.2.u", K::theorem, S::pair_n, 1, "sum_{k<p} (1 + B^-k) u_k H_k^n = 0 (mod p)",
       b_unit_delta_square, thm12<false>, thm12_pairs},
      {"thm1.2.v", K::theorem, S::pair_n, 1, "sum_{k<p} (1 - B^-k) v_k H_k^n = 0 (mod p)",
       b_unit_delta_square, thm12<true>, thm12_pairs},
      {"cor1.3.a", K::corollary, S::n, 1, "sum_{k<p} F_{2k} H_k^n = 0 (mod p)", p_pm1_mod5, cor13<0>},
      {"cor1.3.b", K::corollary, S::n, 1, "sum_{k<p, k even} F_k H_k^n = 0 (mod p)", p_pm1_mod5, cor13<1>},
      {"cor1.3.c", K::corollary, S::n, 1, "sum_{k<p, k odd} L_k H_k^n = 0 (mod p)", p_pm1_mod5, cor13<2>},
      {"eq1.6", K::theorem, S::none, 1, "sum_{k<p} (-1)^k (k/3) H_k = 0 (mod p)", always, eq16},
      {"eq1.7", K::theorem, S::none, 1, "sum_{k<p} (k/3) H_k = ((p/3)-1)/4 q_p(3) (mod p)", always, eq17},
      {"eq1.8", K::theorem, S::none, 1, "sum_{k<p} (-1)^k (k/3) k H_k = (1-(p/3))/2 (mod p)", always, eq18},
      {"eq1.9", K::theorem, S::none, 1, "sum_{k<p} (1 + 2^-k) u_k(2,2) H_k = 0 (mod p)", always, eq19},
      {"thm1.3", K::theorem, S::none, 1, "sum_{k<p} u_{k+delta}(1,4)/2^k H_k = 0 (mod p), p > 5", above5,
       thm13},
      {"eq2.1", K::identity, S::none, 2, "(-1)^k binom(p-1,k) = 1 - p H_k (mod p^2) for all k < p", always,
       eq21},
      {"eq2.3", K::identity, S::none, 2,
       "sum_{k<p} binom(p-1,k) (-1)^k (2^-k + 1) u_k(2,2) = (-1)^((p+1)/4) / 2^((p-1)/2), p = 3 (mod 4)",
       p3_mod4, eq23},
      {"eq2.4", K::identity, S::none, 2,
       "sum_{k<p} (2^-k + 1) u_k(2,2) = 2 - (-1)^((p+1)/4) 2^((p-1)/2), p = 3 (mod 4)", p3_mod4, eq24},
      {"lucas.companion", K::identity, S::pair, 2, "A u_n + v_n = 2 u_{n+1} for n <= p", always, companion,
       lucas_pairs},
      {"lucas.doubling", K::identity, S::pair, 2, "u_{2n} = u_n v_n for 2n <= p+1", always, doubling,
       lucas_pairs},
      {"closed.m11", K::identity, S::none, 2, "u_n(-1,1) = (n/3) for n <= p+1", always,
       closed<ClosedForm::neg1_1>},
      {"closed.p11", K::identity, S::none, 2, "u_n(1,1) = (-1)^(n-1) (n/3) for n <= p+1", always,
       closed<ClosedForm::pos1_1>},
      {"closed.a22", K::identity, S::none, 2, "u_n(2,2) closed form in powers of -4 for n <= p+1", always,
       closed<ClosedForm::two_two>},
      {"closed.delta0", K::identity, S::even_a, 2, "u_n(A,A^2/4) = n (A/2)^(n-1) for n <= p+1", even_a,
       closed<ClosedForm::zero_delta>, even_as},
      {"lemma2.2.alpha", K::lemma, S::pair, 1, "alpha^(p-(Delta/p)) = B^((1-(Delta/p))/2) (mod p), scalar part",
       b_delta_units, lemma22<0>, lemma22_pairs},
      {"lemma2.2.alpha_irr", K::lemma, S::pair, 1, "alpha^(p-(Delta/p)) has zero alpha-coefficient (mod p)",
       b_delta_units, lemma22<1>, lemma22_pairs},
      {"lemma2.2.beta", K::lemma, S::pair, 1, "beta^(p-(Delta/p)) = B^((1-(Delta/p))/2) (mod p), scalar part",
       b_delta_units, lemma22<2>, lemma22_pairs},
      {"lemma2.2.beta_irr", K::lemma, S::pair, 1, "beta^(p-(Delta/p)) has zero alpha-coefficient (mod p)",
       b_delta_units, lemma22<3>, lemma22_pairs},
      {"lemma3.1.lower", K::lemma, S::pair, 1, "u_{(p-1)/2} = 0 or (1/b)((A-2b)/p) (mod p), b^2 = B",
       b_square_delta_unit, lemma31<0>, lemma31_pairs},
      {"lemma3.1.upper", K::lemma, S::pair, 1, "u_{(p+1)/2} = ((A-2b)/p) or 0 (mod p), b^2 = B",
       b_square_delta_unit, lemma31<1>, lemma31_pairs},
      {"lemma3.2", K::lemma, S::none, 2,
       "u_p - 2^(p-1)(p/15) = 2^((p/15)-2) u_{p-(p/15)} (mod p^2), u = u(1,4), p > 5", above5, lemma32},
      {"eq3.4.a", K::lemma, S::none, 1, "u_{(p-(p/15))/2}(1,4) = 0 (mod p), p > 5", above5, eq34<0>},
      {"eq3.4.b", K::lemma, S::none, 1, "u_{(p+(p/15))/2}(1,4) = (-3/p) 2^(((p/15)-1)/2) (mod p), p > 5",
       above5, eq34<1>},
      {"conj1.1.a", K::conjecture, S::none, 1, "sum_{k<p} (-2)^k binom(2k,k) H_k^(2) = (2/3) q_p(2)^2 (mod p)",
       always, conj11a},
      {"conj1.1.b", K::conjecture, S::none, 1,
       "sum_{k<p} (-1)^k binom(2k,k) H_k^(2) = (5/2)(p/5) F_{p-(p/5)}^2/p^2 (mod p), p > 5", above5, conj11b},
      {"conj1.2.a", K::conjecture, S::none, 1, "sum u_k(2,-1)/(-8)^k binom(2k,k)^2 = 0 (mod p), p = 5 (mod 8)",
       residue_class<8, 5>, conj12<2, -1, false, -8>},
      {"conj1.2.b", K::conjecture, S::none, 1, "sum u_k(2,-1)/32^k binom(2k,k)^2 = 0 (mod p), p = 7 (mod 8)",
       residue_class<8, 7>, conj12<2, -1, false, 32>},
      {"conj1.2.c", K::conjecture, S::none, 1,
       "sum v_k(2,-1)/(-8)^k binom(2k,k)^2 = 0 (mod p), p = 5,7 (mod 8)", residue_class<8, 5, 7>,
       conj12<2, -1, true, -8>},
      {"conj1.2.d", K::conjecture, S::none, 1, "sum v_k(2,-1)/32^k binom(2k,k)^2 = 0 (mod p), p = 5 (mod 8)",
       residue_class<8, 5>, conj12<2, -1, true, 32>},
      {"conj1.2.e", K::conjecture, S::none, 1, "sum u_k(4,1)/4^k binom(2k,k)^2 = 0 (mod p), p = 2 (mod 3)",
       residue_class<3, 2>, conj12<4, 1, false, 4>},
      {"conj1.2.f", K::conjecture, S::none, 1, "sum u_k(4,1)/64^k binom(2k,k)^2 = 0 (mod p), p = 11 (mod 12)",
       residue_class<12, 11>, conj12<4, 1, false, 64>},
      {"conj1.2.g", K::conjecture, S::none, 1, "sum v_k(4,1)/4^k binom(2k,k)^2 = 0 (mod p), p = 5 (mod 12)",
       residue_class<12, 5>, conj12<4, 1, true, 4>},
      {"conj1.2.h", K::conjecture, S::none, 1, "sum v_k(4,1)/64^k binom(2k,k)^2 = 0 (mod p), p = 5 (mod 12)",
       residue_class<12, 5>, conj12<4, 1, true, 64>},
      {"conj1.3.a", K::conjecture, S::none, 3,
       "sum binom(p-1,k) binom(2k,k) ((-1)^k - (-3)^-k) = (p/3)(3^(p-1)-1) (mod p^3)", always, conj13a},
      {"conj1.3.b", K::conjecture, S::none, 3,
       "sum binom(p-1,k) binom(2k,k) (-1)^k u_k(4,1) = (-1)^((p-1)/2) u_{p-1}(4,1) (mod p^3), p = +-1 (mod 12)",
       residue_class<12, 1, 11>, conj13_lucas<4, 1, -1>},
      {"conj1.3.c", K::conjecture, S::none, 3,
       "sum binom(p-1,k) binom(2k,k) u_k(4,2)/(-2)^k = (-1)^((p-1)/2) u_{p-1}(4,2) (mod p^3), p = +-1 (mod 8)",
       residue_class<8, 1, 7>, conj13_lucas<4, 2, -2>},
  };
  return table;
}

inline const CheckInfo* find_check(std::string_view id) {
  for (const auto& c : catalog())
    if (c.id == id) return &c;
  return nullptr;
}

/// Checks whose id equals `pattern` or starts with `pattern` followed by '.'.
inline std::vector<const CheckInfo*> select_checks(std::string_view pattern) {
  std::vector<const CheckInfo*> out;
  for (const auto& c : catalog()) {
    if (c.id == pattern ||
        (c.id.size() > pattern.size() && c.id.starts_with(pattern) && c.id[pattern.size()] == '.'))
      out.push_back(&c);
  }
  if (out.empty()) throw UsageError("unknown check id: " + std::string(pattern));
  return out;
}

namespace detail {

inline Params normalize_params(const CheckInfo& info, Params q) {
  auto need = [&](const std::optional<std::int64_t>& v, const char* name) {
    if (!v) throw UsageError(std::string(info.id) + " needs parameter " + name);
  };
  switch (info.shape) {
    case ParamShape::none: return {};
    case ParamShape::pair:
      need(q.A, "A");
      need(q.B, "B");
      return {q.A, q.B, std::nullopt, info.id.starts_with("lemma3.1") ? q.b : std::nullopt};
    case ParamShape::pair_n:
      need(q.A, "A");
      need(q.B, "B");
      need(q.n, "n");
      if (*q.n < 0) throw UsageError("n must be non-negative");
      return {q.A, q.B, q.n, std::nullopt};
    case ParamShape::n:
      need(q.n, "n");
      if (*q.n < 0) throw UsageError("n must be non-negative");
      return {std::nullopt, std::nullopt, q.n, std::nullopt};
    case ParamShape::even_a:
      need(q.A, "A");
      return {q.A, std::nullopt, std::nullopt, std::nullopt};
  }
  return {};
}

}  // namespace detail

/// Evaluates one catalog check at the workspace prime.
inline std::vector<CheckResult> evaluate(const CheckInfo& info, Workspace& ws, const Params& raw) {
  const Params q = detail::normalize_params(info, raw);
  if (q.A || q.B) LucasParams(q.A.value_or(0), q.B.value_or(0));  // range check
  const std::uint64_t p = ws.prime();
  const auto start = std::chrono::steady_clock::now();
  std::vector<CheckResult> out;
  if (auto reason = info.gate(p, q)) {
    const Residue z = res_from_int(0, ws.mod(info.power));
    out.push_back({std::string(info.id), p, q, z, z, z, Status::skip, 0, *reason});
    return out;
  }
  for (Outcome& o : info.body(ws, q)) {
    const Residue residual = o.lhs - o.rhs;
    Params shown = o.params == Params{} ? q : o.params;
    out.push_back({std::string(info.id), p, shown, o.lhs, o.rhs, residual,
                   residual.is_zero() ? Status::pass : Status::fail, 0, std::move(o.note), o.flagged});
  }
  const auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  for (auto& r : out) r.elapsed_us = static_cast<std::int64_t>(us);
  return out;
}

inline std::vector<CheckResult> evaluate(std::string_view id, std::uint64_t p, const Params& params = {}) {
  Workspace ws(p);
  std::vector<CheckResult> out;
  for (const CheckInfo* info : select_checks(id)) {
    auto part = evaluate(*info, ws, params);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

/// Failures of theorem, corollary, lemma and identity checks indicate bugs;
/// conjecture failures are findings.
inline bool is_bug_level(CheckKind k) noexcept { return k != CheckKind::conjecture; }

}  // namespace hlv
