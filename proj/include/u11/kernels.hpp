#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "u11/mat.hpp"

namespace u11::kern {

/// Modulus data for the batched kernels; mu is the Barrett constant
/// floor(2^32 / m), valid for inputs below 2^26.
struct ModCtx {
  uint32_t m = 3;
  uint32_t eps = 2;
  uint64_t mu = 0;
};
ModCtx mod_ctx(const RingCtx& R);

/// Structure-of-arrays batch of 2x2 quad-ring matrices: lane k holds
/// component k of every element, in ElemCode component order.
struct Batch {
  size_t n = 0;
  std::array<std::vector<uint32_t>, 8> lane;

  void resize(size_t count) {
    n = count;
    for (auto& l : lane) l.resize(count);
  }
  void load(const ElemCode* codes, size_t count) {
    resize(count);
    for (size_t i = 0; i < count; ++i)
      for (int k = 0; k < 8; ++k) lane[static_cast<size_t>(k)][i] = codes[i][static_cast<size_t>(k)];
  }
  void load(const std::vector<ElemCode>& codes) { load(codes.data(), codes.size()); }
  void load_indices(const std::vector<ElemCode>& codes, const uint32_t* idx, size_t count) {
    resize(count);
    for (size_t i = 0; i < count; ++i)
      for (int k = 0; k < 8; ++k)
        lane[static_cast<size_t>(k)][i] = codes[idx[i]][static_cast<size_t>(k)];
  }
  ElemCode get(size_t i) const {
    ElemCode e;
    for (int k = 0; k < 8; ++k) e[static_cast<size_t>(k)] = lane[static_cast<size_t>(k)][i];
    return e;
  }
  void set(size_t i, const ElemCode& e) {
    for (int k = 0; k < 8; ++k) lane[static_cast<size_t>(k)][i] = e[static_cast<size_t>(k)];
  }
};

/// One kernel implementation. out may not alias the inputs.
struct Backend {
  const char* name;
  void (*mul_rows_rows)(const Batch& x, const Batch& y, Batch& out, const ModCtx& mod);
  void (*mul_rows_fixed)(const Batch& x, const ElemCode& f, Batch& out, const ModCtx& mod);
  void (*mul_fixed_rows)(const ElemCode& f, const Batch& x, Batch& out, const ModCtx& mod);
};

const Backend& scalar_backend();
bool avx2_available();                // compiled in and supported by this CPU
const Backend& active_backend();      // honors U11_KERNELS=scalar|avx2, else auto
void set_backend(const char* name);   // nullptr resets to auto; tests only

/// Moduli above this limit always take the scalar path (Barrett headroom).
inline constexpr uint32_t kSimdModLimit = 1u << 13;

// Dispatching entry points (scalar fallback for large moduli).
void mul_rows_rows(const Batch& x, const Batch& y, Batch& out, const ModCtx& mod);
void mul_rows_fixed(const Batch& x, const ElemCode& f, Batch& out, const ModCtx& mod);
void mul_fixed_rows(const ElemCode& f, const Batch& x, Batch& out, const ModCtx& mod);

/// out[i] = linv * x[i] * r; the usual conjugation scan shape.
void conj_fixed_rows(const ElemCode& linv, const Batch& x, const ElemCode& r, Batch& out,
                     const ModCtx& mod);

}  // namespace u11::kern
