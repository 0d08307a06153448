#include "u11/mat.hpp"

namespace u11 {

Mat2 mmul(const Mat2& x, const Mat2& y, const RingCtx& R) {
  return {qadd(qmul(x.a, y.a, R), qmul(x.b, y.c, R), R),
          qadd(qmul(x.a, y.b, R), qmul(x.b, y.d, R), R),
          qadd(qmul(x.c, y.a, R), qmul(x.d, y.c, R), R),
          qadd(qmul(x.c, y.b, R), qmul(x.d, y.d, R), R)};
}

Mat2 madd(const Mat2& x, const Mat2& y, const RingCtx& R) {
  return {qadd(x.a, y.a, R), qadd(x.b, y.b, R), qadd(x.c, y.c, R), qadd(x.d, y.d, R)};
}

Mat2 msub(const Mat2& x, const Mat2& y, const RingCtx& R) {
  return {qsub(x.a, y.a, R), qsub(x.b, y.b, R), qsub(x.c, y.c, R), qsub(x.d, y.d, R)};
}

Mat2 mneg(const Mat2& x, const RingCtx& R) {
  return {qneg(x.a, R), qneg(x.b, R), qneg(x.c, R), qneg(x.d, R)};
}

Mat2 mscale(Quad s, const Mat2& x, const RingCtx& R) {
  return {qmul(s, x.a, R), qmul(s, x.b, R), qmul(s, x.c, R), qmul(s, x.d, R)};
}

Quad mdet(const Mat2& x, const RingCtx& R) {
  return qsub(qmul(x.a, x.d, R), qmul(x.b, x.c, R), R);
}

Mat2 mconj(const Mat2& x, const RingCtx& R) {
  return {qconj(x.a, R), qconj(x.b, R), qconj(x.c, R), qconj(x.d, R)};
}

Mat2 munitary_inv(const Mat2& g, const RingCtx& R) {
  return {qconj(g.d, R), qconj(g.b, R), qconj(g.c, R), qconj(g.a, R)};
}

Mat2 minv(const Mat2& g, const RingCtx& R) {
  Quad di = qinv(mdet(g, R), R);
  return {qmul(di, g.d, R), qmul(di, qneg(g.b, R), R), qmul(di, qneg(g.c, R), R),
          qmul(di, g.a, R)};
}

Mat2 mpow(const Mat2& g, uint64_t e, const RingCtx& R) {
  Mat2 r = mat_id(), b = g;
  while (e) {
    if (e & 1) r = mmul(r, b, R);
    b = mmul(b, b, R);
    e >>= 1;
  }
  return r;
}

bool is_member_K(const Mat2& g, const RingCtx& R) {
  // conj(a)d + conj(c)b = 1
  Quad s = qadd(qmul(qconj(g.a, R), g.d, R), qmul(qconj(g.c, R), g.b, R), R);
  if (!(s == qone())) return false;
  // conj(a)c and conj(b)d have zero trace (lie in w*R_F)
  if (qmul(qconj(g.a, R), g.c, R).a0 != 0) return false;
  if (qmul(qconj(g.b, R), g.d, R).a0 != 0) return false;
  return true;
}

bool in_lie_k(const Mat2& body, const RingCtx& R) {
  // d = -conj(a); b, c rational multiples of w
  if (!(body.d == qneg(qconj(body.a, R), R))) return false;
  return body.b.a0 == 0 && body.c.a0 == 0;
}

bool lie_in_level(const LieElem& X, int r, const RingCtx& R) {
  int need = r + X.shift;  // entry valuations of the body
  if (need <= 0) return true;
  if (need > R.N) return false;  // not certifiable at this precision
  return qval(X.body.a, R) >= need && qval(X.body.b, R) >= need && qval(X.body.c, R) >= need &&
         qval(X.body.d, R) >= need;
}

LieElem lie_rebase(const LieElem& X, int shift, const RingCtx& R) {
  if (shift < X.shift) fail(Err::PrecisionExceeded, "lie_rebase would divide the body");
  int k = shift - X.shift;
  return {{qshift_up(X.body.a, k, R), qshift_up(X.body.b, k, R), qshift_up(X.body.c, k, R),
           qshift_up(X.body.d, k, R)},
          shift};
}

bool lie_eq(const LieElem& X, const LieElem& Y, const RingCtx& R) {
  int e = std::max(X.shift, Y.shift);
  return lie_rebase(X, e, R).body == lie_rebase(Y, e, R).body;
}

LieElem lie_add(const LieElem& X, const LieElem& Y, const RingCtx& R) {
  int e = std::max(X.shift, Y.shift);
  return {madd(lie_rebase(X, e, R).body, lie_rebase(Y, e, R).body, R), e};
}

LieElem lie_sub(const LieElem& X, const LieElem& Y, const RingCtx& R) {
  int e = std::max(X.shift, Y.shift);
  return {msub(lie_rebase(X, e, R).body, lie_rebase(Y, e, R).body, R), e};
}

LieElem lie_conj(const Mat2& g, const LieElem& X, const RingCtx& R) {
  return {mmul(mmul(g, X.body, R), minv(g, R), R), X.shift};
}

void CodeIndex::reserve(size_t n) {
  size_t cap = 16;
  while (cap < 2 * n) cap <<= 1;
  if (cap > keys_.size()) {
    std::vector<ElemCode> old_keys = std::move(keys_);
    std::vector<int64_t> old_vals = std::move(vals_);
    keys_.assign(cap, ElemCode{});
    vals_.assign(cap, -1);
    mask_ = cap - 1;
    size_ = 0;
    for (size_t i = 0; i < old_vals.size(); ++i)
      if (old_vals[i] >= 0) insert(old_keys[i], static_cast<uint32_t>(old_vals[i]));
  }
}

void CodeIndex::grow() { reserve(vals_.empty() ? 16 : vals_.size()); }

uint32_t CodeIndex::insert(const ElemCode& e, uint32_t idx) {
  if (vals_.empty() || 2 * (size_ + 1) > vals_.size()) grow();
  size_t h = CodeHash{}(e) & mask_;
  while (vals_[h] >= 0) {
    if (keys_[h] == e) return static_cast<uint32_t>(vals_[h]);
    h = (h + 1) & mask_;
  }
  keys_[h] = e;
  vals_[h] = idx;
  ++size_;
  return idx;
}

int64_t CodeIndex::find(const ElemCode& e) const {
  if (vals_.empty()) return -1;
  size_t h = CodeHash{}(e) & mask_;
  while (vals_[h] >= 0) {
    if (keys_[h] == e) return vals_[h];
    h = (h + 1) & mask_;
  }
  return -1;
}

}  // namespace u11
