#include "u11/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace u11::kern {

#ifdef U11_HAVE_AVX2_TU
const Backend& avx2_backend_impl();
bool avx2_cpu_supported();
#endif

bool avx2_available() {
#ifdef U11_HAVE_AVX2_TU
  return avx2_cpu_supported();
#else
  return false;
#endif
}

ModCtx mod_ctx(const RingCtx& R) {
  ModCtx m;
  m.m = R.pN;
  m.eps = R.eps % R.pN;
  m.mu = (static_cast<uint64_t>(1) << 32) / R.pN;
  return m;
}

namespace {

const Backend* g_forced = nullptr;
bool g_forced_set = false;

const Backend& pick() {
  if (g_forced_set && g_forced) return *g_forced;
  if (const char* env = std::getenv("U11_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) return scalar_backend();
#ifdef U11_HAVE_AVX2_TU
    if (std::strcmp(env, "avx2") == 0 && avx2_available()) return avx2_backend_impl();
#endif
  }
#ifdef U11_HAVE_AVX2_TU
  if (avx2_available()) return avx2_backend_impl();
#endif
  return scalar_backend();
}

}  // namespace

const Backend& active_backend() { return pick(); }

void set_backend(const char* name) {
  if (!name) {
    g_forced_set = false;
    g_forced = nullptr;
    return;
  }
  if (std::strcmp(name, "scalar") == 0) {
    g_forced = &scalar_backend();
    g_forced_set = true;
    return;
  }
#ifdef U11_HAVE_AVX2_TU
  if (std::strcmp(name, "avx2") == 0 && avx2_available()) {
    g_forced = &avx2_backend_impl();
    g_forced_set = true;
    return;
  }
#endif
  g_forced_set = false;
  g_forced = nullptr;
}

void mul_rows_rows(const Batch& x, const Batch& y, Batch& out, const ModCtx& mod) {
  const Backend& b = mod.m <= kSimdModLimit ? active_backend() : scalar_backend();
  b.mul_rows_rows(x, y, out, mod);
}

void mul_rows_fixed(const Batch& x, const ElemCode& f, Batch& out, const ModCtx& mod) {
  const Backend& b = mod.m <= kSimdModLimit ? active_backend() : scalar_backend();
  b.mul_rows_fixed(x, f, out, mod);
}

void mul_fixed_rows(const ElemCode& f, const Batch& x, Batch& out, const ModCtx& mod) {
  const Backend& b = mod.m <= kSimdModLimit ? active_backend() : scalar_backend();
  b.mul_fixed_rows(f, x, out, mod);
}

void conj_fixed_rows(const ElemCode& linv, const Batch& x, const ElemCode& r, Batch& out,
                     const ModCtx& mod) {
  Batch tmp;
  mul_fixed_rows(linv, x, tmp, mod);
  mul_rows_fixed(tmp, r, out, mod);
}

}  // namespace u11::kern
