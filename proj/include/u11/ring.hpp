#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <numeric>
#include <string>

#include "u11/errors.hpp"

namespace u11 {

/// Ambient ring data: R_F = Z/p^N and R_E = R_F[w]/(w^2 - eps), p odd,
/// eps a non-square unit mod p.  All residues are canonical in [0, p^N).
struct RingCtx {
  uint32_t p = 3;
  int N = 1;
  uint32_t pN = 3;
  uint32_t eps = 2;
  std::array<uint32_t, 9> ppow{};  // p^0 .. p^N

  uint32_t pk(int k) const { return ppow[static_cast<size_t>(k)]; }
  bool same(const RingCtx& o) const { return p == o.p && N == o.N && eps == o.eps; }
  std::string key() const;  // "p3_e2_N2", used for cache file names
};

/// Validates p odd prime, 1 <= N <= 8, eps a non-square unit mod p.
RingCtx ring_make(uint32_t p, int64_t epsilon, int N);

// ---- base ring Z/p^N ----

inline uint32_t addm(uint32_t a, uint32_t b, uint32_t m) {
  uint32_t s = a + b;
  return s >= m ? s - m : s;
}
inline uint32_t subm(uint32_t a, uint32_t b, uint32_t m) { return a >= b ? a - b : a + m - b; }
inline uint32_t negm(uint32_t a, uint32_t m) { return a == 0 ? 0 : m - a; }
inline uint32_t mulm(uint32_t a, uint32_t b, uint32_t m) {
  return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % m);
}
uint32_t powm(uint32_t a, uint64_t e, uint32_t m);
uint32_t invm(uint32_t a, uint32_t m);  // NonUnit if gcd(a, m) != 1

/// Largest k <= N with p^k | v; val(0) = N (sentinel, reads as ">= N").
int val_base(uint32_t v, const RingCtx& R);

// ---- quadratic extension R_E ----

/// a0 + a1*w with w^2 = eps.
struct Quad {
  uint32_t a0 = 0, a1 = 0;
  bool operator==(const Quad&) const = default;
};

inline Quad qzero() { return {0, 0}; }
inline Quad qone() { return {1, 0}; }
inline Quad qmake(uint32_t a0, uint32_t a1) { return {a0, a1}; }
inline Quad qadd(Quad x, Quad y, const RingCtx& R) {
  return {addm(x.a0, y.a0, R.pN), addm(x.a1, y.a1, R.pN)};
}
inline Quad qsub(Quad x, Quad y, const RingCtx& R) {
  return {subm(x.a0, y.a0, R.pN), subm(x.a1, y.a1, R.pN)};
}
inline Quad qneg(Quad x, const RingCtx& R) { return {negm(x.a0, R.pN), negm(x.a1, R.pN)}; }
inline Quad qconj(Quad x, const RingCtx& R) { return {x.a0, negm(x.a1, R.pN)}; }
inline Quad qmul(Quad x, Quad y, const RingCtx& R) {
  uint32_t m = R.pN;
  uint32_t re = addm(mulm(x.a0, y.a0, m), mulm(R.eps, mulm(x.a1, y.a1, m), m), m);
  uint32_t im = addm(mulm(x.a0, y.a1, m), mulm(x.a1, y.a0, m), m);
  return {re, im};
}
inline Quad qscale(uint32_t c, Quad x, const RingCtx& R) {
  return {mulm(c, x.a0, R.pN), mulm(c, x.a1, R.pN)};
}
inline uint32_t qnorm(Quad x, const RingCtx& R) {
  return subm(mulm(x.a0, x.a0, R.pN), mulm(R.eps, mulm(x.a1, x.a1, R.pN), R.pN), R.pN);
}
inline uint32_t qtrace(Quad x, const RingCtx& R) { return addm(x.a0, x.a0, R.pN); }

int qval(Quad x, const RingCtx& R);  // min of component valuations, val(0) = N
inline bool qis_unit(Quad x, const RingCtx& R) { return qval(x, R) == 0; }
Quad qinv(Quad x, const RingCtx& R);  // conj(x)/norm(x); NonUnit if val > 0
inline bool qis_rational(Quad x) { return x.a1 == 0; }

/// Exact multiplication by p^k (k >= 0).
inline Quad qshift_up(Quad x, int k, const RingCtx& R) {
  if (k >= R.N) return qzero();
  uint32_t c = R.pk(k);
  return {mulm(c, x.a0, R.pN), mulm(c, x.a1, R.pN)};
}

// ---- shifted elements: p^{-shift} * body, body mod p^N ----

struct Shifted {
  Quad body{};
  int shift = 0;  // >= 0
};

inline Shifted sh_make(Quad body, int shift = 0) {
  if (shift < 0) fail(Err::Internal, "negative shift");
  return {body, shift};
}
inline Shifted sh_int(Quad body) { return {body, 0}; }
inline Shifted sh_rational(uint32_t v, int shift = 0) { return {{v, 0}, shift}; }

/// Rebase to a larger shift e >= x.shift (exact: multiplies the body by p^{e-shift}).
inline Shifted sh_rebase(Shifted x, int e, const RingCtx& R) {
  if (e < x.shift) fail(Err::PrecisionExceeded, "sh_rebase would divide the body");
  return {qshift_up(x.body, e - x.shift, R), e};
}

/// Valuation of the represented element: val(body) - shift (val(0) reads >= N - shift).
inline int sh_val(Shifted x, const RingCtx& R) { return qval(x.body, R) - x.shift; }
inline bool sh_val_at_least(Shifted x, int r, const RingCtx& R) { return sh_val(x, R) >= r; }
/// Exact valuation test; false when the body is 0 (truncation hides the value).
inline bool sh_val_exactly(Shifted x, int r, const RingCtx& R) {
  return x.body != qzero() && sh_val(x, R) == r;
}

/// Equality after aligning shifts, i.e. within the common precision window.
inline bool sh_eq(Shifted x, Shifted y, const RingCtx& R) {
  int e = std::max(x.shift, y.shift);
  return sh_rebase(x, e, R).body == sh_rebase(y, e, R).body;
}

inline Shifted sh_add(Shifted x, Shifted y, const RingCtx& R) {
  int e = std::max(x.shift, y.shift);
  return {qadd(sh_rebase(x, e, R).body, sh_rebase(y, e, R).body, R), e};
}
inline Shifted sh_neg(Shifted x, const RingCtx& R) { return {qneg(x.body, R), x.shift}; }
inline Shifted sh_mul(Shifted x, Shifted y, const RingCtx& R) {
  int e = x.shift + y.shift;
  if (e > R.N) fail(Err::PrecisionExceeded, "combined shift exceeds precision");
  return {qmul(x.body, y.body, R), e};
}
inline Shifted sh_conj(Shifted x, const RingCtx& R) { return {qconj(x.body, R), x.shift}; }

// ---- exact roots of unity ----

/// exp(2*pi*i * num/den), kept reduced with 0 <= num < den.
struct Phase {
  int64_t num = 0;
  int64_t den = 1;

  static Phase of(int64_t num, int64_t den);
  static Phase one() { return {0, 1}; }
  Phase mul(Phase o) const;          // product of the unit complex numbers
  Phase pow(int64_t k) const;
  Phase inv() const { return pow(-1); }
  bool is_one() const { return num == 0; }
  bool operator==(const Phase&) const = default;
  std::complex<double> value() const;
};

// ---- additive characters ----

/// psi'(p^{-e} t) = exp(2*pi*i * t / p^{e+1}); trivial exactly on p^{-e} p_F.
/// NotRational if the body has a nonzero w-component; PrecisionExceeded if
/// the body is not known mod p^{shift+1} (i.e. shift >= N).
Phase psi_prime_phase(Shifted x, const RingCtx& R);
std::complex<double> psi_prime(Shifted x, const RingCtx& R);

/// psi(x) = psi'((x + conj(x))/2), the w-component drops out.
Phase psi_E_phase(Shifted x, const RingCtx& R);
std::complex<double> psi_E(Shifted x, const RingCtx& R);

}  // namespace u11
