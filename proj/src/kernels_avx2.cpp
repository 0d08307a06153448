#include "u11/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

// AVX2 variants of the batched quad-ring matrix kernels. Residues are < m
// <= kSimdModLimit, so raw 32x32 products stay below 2^26 and a single
// Barrett step with mu = floor(2^32/m) reduces into [0, 2m).

namespace u11::kern {
namespace {

struct VMod {
  __m256i m;    // modulus per 32-bit lane
  __m256i mu;   // Barrett constant in the low half of each 64-bit lane
  __m256i eps;
};

inline VMod vmod(const ModCtx& mc) {
  return {_mm256_set1_epi32(static_cast<int>(mc.m)),
          _mm256_set1_epi64x(static_cast<long long>(mc.mu)),
          _mm256_set1_epi32(static_cast<int>(mc.eps))};
}

// r = x mod m for 64-bit lanes holding values < 2^26 in the low half.
inline __m256i barrett64(__m256i x, const VMod& v) {
  __m256i q = _mm256_srli_epi64(_mm256_mul_epu32(x, v.mu), 32);
  __m256i m64 = _mm256_blend_epi32(v.m, _mm256_setzero_si256(), 0xAA);
  return _mm256_sub_epi64(x, _mm256_mul_epu32(q, m64));
}

inline __m256i mulmod(__m256i a, __m256i b, const VMod& v) {
  __m256i pe = _mm256_mul_epu32(a, b);
  __m256i po = _mm256_mul_epu32(_mm256_srli_epi64(a, 32), _mm256_srli_epi64(b, 32));
  __m256i re = barrett64(pe, v);
  __m256i ro = barrett64(po, v);
  __m256i r = _mm256_blend_epi32(re, _mm256_slli_epi64(ro, 32), 0xAA);
  // fold [0, 2m) into [0, m)
  return _mm256_min_epu32(r, _mm256_sub_epi32(r, v.m));
}

inline __m256i addmod(__m256i a, __m256i b, const VMod& v) {
  __m256i s = _mm256_add_epi32(a, b);
  return _mm256_min_epu32(s, _mm256_sub_epi32(s, v.m));
}

struct VQ {
  __m256i r, i;
};

inline VQ qmul(VQ x, VQ y, const VMod& v) {
  __m256i t0 = mulmod(x.r, y.r, v);
  __m256i t1 = mulmod(v.eps, mulmod(x.i, y.i, v), v);
  __m256i u0 = mulmod(x.r, y.i, v);
  __m256i u1 = mulmod(x.i, y.r, v);
  return {addmod(t0, t1, v), addmod(u0, u1, v)};
}
inline VQ qadd(VQ x, VQ y, const VMod& v) { return {addmod(x.r, y.r, v), addmod(x.i, y.i, v)}; }

struct VMat {
  VQ a, b, c, d;
};

inline VMat mul(const VMat& x, const VMat& y, const VMod& v) {
  return {qadd(qmul(x.a, y.a, v), qmul(x.b, y.c, v), v),
          qadd(qmul(x.a, y.b, v), qmul(x.b, y.d, v), v),
          qadd(qmul(x.c, y.a, v), qmul(x.d, y.c, v), v),
          qadd(qmul(x.c, y.b, v), qmul(x.d, y.d, v), v)};
}

inline VMat load8(const Batch& x, size_t i) {
  auto ld = [&](int k) {
    return _mm256_loadu_si256(
        reinterpret_cast<const __m256i*>(x.lane[static_cast<size_t>(k)].data() + i));
  };
  return {{ld(0), ld(1)}, {ld(2), ld(3)}, {ld(4), ld(5)}, {ld(6), ld(7)}};
}

inline VMat splat(const ElemCode& f) {
  auto sp = [&](int k) { return _mm256_set1_epi32(static_cast<int>(f[static_cast<size_t>(k)])); };
  return {{sp(0), sp(1)}, {sp(2), sp(3)}, {sp(4), sp(5)}, {sp(6), sp(7)}};
}

inline void store8(Batch& out, size_t i, const VMat& z) {
  auto st = [&](int k, __m256i val) {
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.lane[static_cast<size_t>(k)].data() + i),
                        val);
  };
  st(0, z.a.r);
  st(1, z.a.i);
  st(2, z.b.r);
  st(3, z.b.i);
  st(4, z.c.r);
  st(5, z.c.i);
  st(6, z.d.r);
  st(7, z.d.i);
}

void tail_scalar(const Batch& x, const Batch* y, const ElemCode* f, bool fixed_left, Batch& out,
                 const ModCtx& mc, size_t from) {
  Batch xs, ys;
  size_t n = x.n - from;
  if (n == 0) return;
  xs.resize(n);
  for (int k = 0; k < 8; ++k)
    for (size_t i = 0; i < n; ++i)
      xs.lane[static_cast<size_t>(k)][i] = x.lane[static_cast<size_t>(k)][from + i];
  Batch os;
  if (y) {
    ys.resize(n);
    for (int k = 0; k < 8; ++k)
      for (size_t i = 0; i < n; ++i)
        ys.lane[static_cast<size_t>(k)][i] = y->lane[static_cast<size_t>(k)][from + i];
    scalar_backend().mul_rows_rows(xs, ys, os, mc);
  } else if (fixed_left) {
    scalar_backend().mul_fixed_rows(*f, xs, os, mc);
  } else {
    scalar_backend().mul_rows_fixed(xs, *f, os, mc);
  }
  for (int k = 0; k < 8; ++k)
    for (size_t i = 0; i < n; ++i)
      out.lane[static_cast<size_t>(k)][from + i] = os.lane[static_cast<size_t>(k)][i];
}

void a_mul_rows_rows(const Batch& x, const Batch& y, Batch& out, const ModCtx& mc) {
  out.resize(x.n);
  VMod v = vmod(mc);
  size_t i = 0;
  for (; i + 8 <= x.n; i += 8) store8(out, i, mul(load8(x, i), load8(y, i), v));
  tail_scalar(x, &y, nullptr, false, out, mc, i);
}

void a_mul_rows_fixed(const Batch& x, const ElemCode& f, Batch& out, const ModCtx& mc) {
  out.resize(x.n);
  VMod v = vmod(mc);
  VMat fm = splat(f);
  size_t i = 0;
  for (; i + 8 <= x.n; i += 8) store8(out, i, mul(load8(x, i), fm, v));
  tail_scalar(x, nullptr, &f, false, out, mc, i);
}

void a_mul_fixed_rows(const ElemCode& f, const Batch& x, Batch& out, const ModCtx& mc) {
  out.resize(x.n);
  VMod v = vmod(mc);
  VMat fm = splat(f);
  size_t i = 0;
  for (; i + 8 <= x.n; i += 8) store8(out, i, mul(fm, load8(x, i), v));
  tail_scalar(x, nullptr, &f, true, out, mc, i);
}

}  // namespace

const Backend& avx2_backend_impl() {
  static const Backend b{"avx2", a_mul_rows_rows, a_mul_rows_fixed, a_mul_fixed_rows};
  return b;
}

bool avx2_cpu_supported() { return __builtin_cpu_supports("avx2"); }

}  // namespace u11::kern

#endif  // x86_64
