#include "u11/kernels.hpp"

// Reference kernels. Everything else is checked against these.

namespace u11::kern {
namespace {

struct Q {
  uint32_t r, i;
};

inline uint32_t mul(uint32_t a, uint32_t b, const ModCtx& m) {
  return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % m.m);
}
inline uint32_t add(uint32_t a, uint32_t b, const ModCtx& m) {
  uint32_t s = a + b;
  return s >= m.m ? s - m.m : s;
}
inline Q qmul(Q x, Q y, const ModCtx& m) {
  return {add(mul(x.r, y.r, m), mul(m.eps, mul(x.i, y.i, m), m), m),
          add(mul(x.r, y.i, m), mul(x.i, y.r, m), m)};
}
inline Q qadd(Q x, Q y, const ModCtx& m) { return {add(x.r, y.r, m), add(x.i, y.i, m)}; }

inline void mul_one(const uint32_t* x, const uint32_t* y, uint32_t* out, const ModCtx& m) {
  Q xa{x[0], x[1]}, xb{x[2], x[3]}, xc{x[4], x[5]}, xd{x[6], x[7]};
  Q ya{y[0], y[1]}, yb{y[2], y[3]}, yc{y[4], y[5]}, yd{y[6], y[7]};
  Q oa = qadd(qmul(xa, ya, m), qmul(xb, yc, m), m);
  Q ob = qadd(qmul(xa, yb, m), qmul(xb, yd, m), m);
  Q oc = qadd(qmul(xc, ya, m), qmul(xd, yc, m), m);
  Q od = qadd(qmul(xc, yb, m), qmul(xd, yd, m), m);
  out[0] = oa.r;
  out[1] = oa.i;
  out[2] = ob.r;
  out[3] = ob.i;
  out[4] = oc.r;
  out[5] = oc.i;
  out[6] = od.r;
  out[7] = od.i;
}

void s_mul_rows_rows(const Batch& x, const Batch& y, Batch& out, const ModCtx& m) {
  out.resize(x.n);
  uint32_t xv[8], yv[8], ov[8];
  for (size_t i = 0; i < x.n; ++i) {
    for (int k = 0; k < 8; ++k) {
      xv[k] = x.lane[static_cast<size_t>(k)][i];
      yv[k] = y.lane[static_cast<size_t>(k)][i];
    }
    mul_one(xv, yv, ov, m);
    for (int k = 0; k < 8; ++k) out.lane[static_cast<size_t>(k)][i] = ov[k];
  }
}

void s_mul_rows_fixed(const Batch& x, const ElemCode& f, Batch& out, const ModCtx& m) {
  out.resize(x.n);
  uint32_t xv[8], ov[8];
  for (size_t i = 0; i < x.n; ++i) {
    for (int k = 0; k < 8; ++k) xv[k] = x.lane[static_cast<size_t>(k)][i];
    mul_one(xv, f.data(), ov, m);
    for (int k = 0; k < 8; ++k) out.lane[static_cast<size_t>(k)][i] = ov[k];
  }
}

void s_mul_fixed_rows(const ElemCode& f, const Batch& x, Batch& out, const ModCtx& m) {
  out.resize(x.n);
  uint32_t xv[8], ov[8];
  for (size_t i = 0; i < x.n; ++i) {
    for (int k = 0; k < 8; ++k) xv[k] = x.lane[static_cast<size_t>(k)][i];
    mul_one(f.data(), xv, ov, m);
    for (int k = 0; k < 8; ++k) out.lane[static_cast<size_t>(k)][i] = ov[k];
  }
}

}  // namespace

const Backend& scalar_backend() {
  static const Backend b{"scalar", s_mul_rows_rows, s_mul_rows_fixed, s_mul_fixed_rows};
  return b;
}

}  // namespace u11::kern
