#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "u11/ring.hpp"

namespace u11 {

/// 2x2 matrix over R_E, row-major.
struct Mat2 {
  Quad a, b, c, d;
  bool operator==(const Mat2&) const = default;
};

/// Canonical element encoding: the 8 base residues in row-major component order.
using ElemCode = std::array<uint32_t, 8>;

inline ElemCode code_of(const Mat2& m) {
  return {m.a.a0, m.a.a1, m.b.a0, m.b.a1, m.c.a0, m.c.a1, m.d.a0, m.d.a1};
}
inline Mat2 mat_of(const ElemCode& e) {
  return {{e[0], e[1]}, {e[2], e[3]}, {e[4], e[5]}, {e[6], e[7]}};
}

inline Mat2 mat_id() { return {qone(), qzero(), qzero(), qone()}; }
inline Mat2 mat_w() { return {qzero(), qone(), qone(), qzero()}; }
inline Mat2 mat_diag(Quad x, Quad y) { return {x, qzero(), qzero(), y}; }

Mat2 mmul(const Mat2& x, const Mat2& y, const RingCtx& R);
Mat2 madd(const Mat2& x, const Mat2& y, const RingCtx& R);
Mat2 msub(const Mat2& x, const Mat2& y, const RingCtx& R);
Mat2 mneg(const Mat2& x, const RingCtx& R);
Mat2 mscale(Quad s, const Mat2& x, const RingCtx& R);
inline Quad mtrace(const Mat2& x, const RingCtx& R) { return qadd(x.a, x.d, R); }
Quad mdet(const Mat2& x, const RingCtx& R);
Mat2 mconj(const Mat2& x, const RingCtx& R);  // entrywise Galois conjugate

/// For g in K the inverse is conj-swap: [[conj(d), conj(b)], [conj(c), conj(a)]].
Mat2 munitary_inv(const Mat2& g, const RingCtx& R);
/// General inverse via adjugate; NonUnit if det is not a unit.
Mat2 minv(const Mat2& g, const RingCtx& R);
Mat2 mpow(const Mat2& g, uint64_t e, const RingCtx& R);

/// Unitary relation conj(g)^T w g = w mod p^N, expanded to the three entry
/// equations (conj(a)d + conj(c)b = 1, trace-zero of conj(a)c and conj(b)d).
bool is_member_K(const Mat2& g, const RingCtx& R);

/// Element of the Lie algebra frak-k carried as p^{-shift} * body.
struct LieElem {
  Mat2 body{};
  int shift = 0;
};

/// Lie algebra condition: d = -conj(a), b and c in w*R_F (on the body).
bool in_lie_k(const Mat2& body, const RingCtx& R);
/// X in frak-k_r, i.e. every entry of p^{-shift} * body has valuation >= r.
bool lie_in_level(const LieElem& X, int r, const RingCtx& R);
LieElem lie_rebase(const LieElem& X, int shift, const RingCtx& R);
bool lie_eq(const LieElem& X, const LieElem& Y, const RingCtx& R);
LieElem lie_add(const LieElem& X, const LieElem& Y, const RingCtx& R);
LieElem lie_sub(const LieElem& X, const LieElem& Y, const RingCtx& R);
/// g X g^{-1} for g with unit determinant (body conjugation, shift kept).
LieElem lie_conj(const Mat2& g, const LieElem& X, const RingCtx& R);

struct CodeHash {
  size_t operator()(const ElemCode& e) const {
    uint64_t h = 0x9e3779b97f4a7c15ull;
    for (uint32_t v : e) {
      h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdull;
    }
    return static_cast<size_t>(h ^ (h >> 33));
  }
};

/// Open-addressing code -> index map (insert-only), deterministic iteration
/// delegated to the owner's element vector.
class CodeIndex {
public:
  void reserve(size_t n);
  /// Returns the existing index or inserts with the given one.
  uint32_t insert(const ElemCode& e, uint32_t idx);
  /// -1 when absent.
  int64_t find(const ElemCode& e) const;
  size_t size() const { return size_; }

private:
  void grow();
  std::vector<ElemCode> keys_;
  std::vector<int64_t> vals_;
  size_t size_ = 0;
  size_t mask_ = 0;
};

}  // namespace u11
