#include "u11/ring.hpp"

#include <cmath>

namespace u11 {

const char* err_name(Err e) {
  switch (e) {
    case Err::EvenResidualChar: return "EvenResidualChar";
    case Err::EpsilonIsSquare: return "EpsilonIsSquare";
    case Err::NonUnit: return "NonUnit";
    case Err::NotRational: return "NotRational";
    case Err::PrecisionExceeded: return "PrecisionExceeded";
    case Err::BudgetExceeded: return "BudgetExceeded";
    case Err::LevelTooLow: return "LevelTooLow";
    case Err::NotAbelian: return "NotAbelian";
    case Err::TrueDepthTooBig: return "TrueDepthTooBig";
    case Err::IncompatibleOnIntersection: return "IncompatibleOnIntersection";
    case Err::NotSubgroup: return "NotSubgroup";
    case Err::GroupMismatch: return "GroupMismatch";
    case Err::BasisNotOrthonormal: return "BasisNotOrthonormal";
    case Err::ValuationViolation: return "ValuationViolation";
    case Err::DomainNotNormal: return "DomainNotNormal";
    case Err::PreconditionViolated: return "PreconditionViolated";
    case Err::SystemInconsistent: return "SystemInconsistent";
    case Err::DepthTooLow: return "DepthTooLow";
    case Err::IrreducibilityFailed: return "IrreducibilityFailed";
    case Err::DecompositionResidual: return "DecompositionResidual";
    case Err::IdentificationFailed: return "IdentificationFailed";
    case Err::ExpansionMismatch: return "ExpansionMismatch";
    case Err::NotRealizable: return "NotRealizable";
    case Err::CacheCorrupt: return "CacheCorrupt";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

std::string RingCtx::key() const {
  return "p" + std::to_string(p) + "_e" + std::to_string(eps % p) + "_N" + std::to_string(N);
}

static bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

RingCtx ring_make(uint32_t p, int64_t epsilon, int N) {
  require(p != 2, Err::EvenResidualChar, "residual characteristic 2 is not supported");
  require(is_prime(p), Err::Internal, "p must be prime");
  require(N >= 1 && N <= 8, Err::Internal, "N must be in [1, 8]");

  RingCtx R;
  R.p = p;
  R.N = N;
  R.ppow[0] = 1;
  for (int k = 1; k <= N; ++k) {
    uint64_t v = static_cast<uint64_t>(R.ppow[k - 1]) * p;
    require(v < (1u << 31), Err::Internal, "p^N too large");
    R.ppow[static_cast<size_t>(k)] = static_cast<uint32_t>(v);
  }
  R.pN = R.ppow[static_cast<size_t>(N)];

  int64_t e = epsilon % static_cast<int64_t>(R.pN);
  if (e < 0) e += R.pN;
  R.eps = static_cast<uint32_t>(e);
  require(R.eps % p != 0, Err::NonUnit, "epsilon must be a unit");
  for (uint32_t x = 0; x < p; ++x)
    require(mulm(x, x, p) != R.eps % p, Err::EpsilonIsSquare, "epsilon is a square mod p");
  return R;
}

uint32_t powm(uint32_t a, uint64_t e, uint32_t m) {
  uint64_t r = 1, b = a % m;
  while (e) {
    if (e & 1) r = (r * b) % m;
    b = (b * b) % m;
    e >>= 1;
  }
  return static_cast<uint32_t>(r);
}

uint32_t invm(uint32_t a, uint32_t m) {
  int64_t t = 0, nt = 1, r = m, nr = a % m;
  while (nr != 0) {
    int64_t q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  require(r == 1, Err::NonUnit, "element has no inverse");
  return static_cast<uint32_t>(t < 0 ? t + m : t);
}

int val_base(uint32_t v, const RingCtx& R) {
  if (v == 0) return R.N;
  int k = 0;
  while (v % R.p == 0) {
    v /= R.p;
    ++k;
  }
  return k;
}

int qval(Quad x, const RingCtx& R) { return std::min(val_base(x.a0, R), val_base(x.a1, R)); }

Quad qinv(Quad x, const RingCtx& R) {
  require(qval(x, R) == 0, Err::NonUnit, "quad element is not a unit");
  uint32_t n = qnorm(x, R);
  uint32_t ni = invm(n, R.pN);
  return qscale(ni, qconj(x, R), R);
}

Phase Phase::of(int64_t num, int64_t den) {
  if (den <= 0) fail(Err::Internal, "phase denominator must be positive");
  num %= den;
  if (num < 0) num += den;
  int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

Phase Phase::mul(Phase o) const {
  int64_t g = std::gcd(den, o.den);
  int64_t l = den / g * o.den;
  return Phase::of(num * (l / den) + o.num * (l / o.den), l);
}

Phase Phase::pow(int64_t k) const {
  int64_t kk = k % den;
  if (kk < 0) kk += den;
  // num < den and kk < den keep the product within int64 for den <= ~3e9^(1/2);
  // denominators here divide group exponents (< 10^7), so this is safe.
  return Phase::of(num * kk, den);
}

std::complex<double> Phase::value() const {
  double t = 2.0 * M_PI * static_cast<double>(num) / static_cast<double>(den);
  return {std::cos(t), std::sin(t)};
}

Phase psi_prime_phase(Shifted x, const RingCtx& R) {
  require(qis_rational(x.body), Err::NotRational, "psi' needs an F-rational argument");
  require(x.shift >= 0 && x.shift + 1 <= R.N, Err::PrecisionExceeded,
          "psi' needs the body mod p^(shift+1)");
  uint32_t mod = R.pk(x.shift + 1);
  return Phase::of(x.body.a0 % mod, mod);
}

std::complex<double> psi_prime(Shifted x, const RingCtx& R) { return psi_prime_phase(x, R).value(); }

Phase psi_E_phase(Shifted x, const RingCtx& R) {
  return psi_prime_phase({{x.body.a0, 0}, x.shift}, R);
}

std::complex<double> psi_E(Shifted x, const RingCtx& R) { return psi_E_phase(x, R).value(); }

}  // namespace u11
