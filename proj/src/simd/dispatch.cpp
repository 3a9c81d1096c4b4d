#include "povmqm/simd/dispatch.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#include "ops_table.hpp"
#include "povmqm/errors.hpp"

namespace povmqm::simd {

namespace {

Backend detect() {
  const char* env = std::getenv("POVMQM_SIMD");
  if (env != nullptr) {
    std::string s(env);
    if (s == "scalar") return Backend::scalar;
    if (s == "avx2" && backend_supported(Backend::avx2)) return Backend::avx2;
    if (s == "neon" && backend_supported(Backend::neon)) return Backend::neon;
    return Backend::scalar;
  }
#if defined(POVMQM_HAVE_AVX2)
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
    return Backend::avx2;
#endif
#if defined(__aarch64__)
  return Backend::neon;
#endif
  return Backend::scalar;
}

const detail::OpsTable* table_for(Backend b) {
  switch (b) {
    case Backend::scalar:
      return &detail::scalar_table();
    case Backend::avx2:
#if defined(POVMQM_HAVE_AVX2)
      return &detail::avx2_table();
#else
      return nullptr;
#endif
    case Backend::neon:
#if defined(__aarch64__)
      return &detail::neon_table();
#else
      return nullptr;
#endif
  }
  return nullptr;
}

struct State {
  Backend backend;
  const detail::OpsTable* ops;
  State() : backend(detect()), ops(table_for(backend)) {}
};

State& state() {
  static State s;
  return s;
}

}  // namespace

Backend active_backend() { return state().backend; }

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
    case Backend::neon: return "neon";
  }
  return "?";
}

bool backend_supported(Backend b) {
  switch (b) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
#if defined(POVMQM_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Backend::neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

void force_backend(Backend b) {
  if (!backend_supported(b))
    throw ValidationError("simd backend not supported on this host: " +
                          std::string(backend_name(b)));
  state().backend = b;
  state().ops = table_for(b);
}

void cmul_inplace(cplx* a, const cplx* b, std::size_t n) {
  state().ops->cmul_inplace(a, b, n);
}
void cmul_real_inplace(cplx* a, const double* r, std::size_t n) {
  state().ops->cmul_real_inplace(a, r, n);
}
void cscale_inplace(cplx* a, double s, std::size_t n) {
  state().ops->cscale_inplace(a, s, n);
}
void abs2(const cplx* a, double* out, std::size_t n) {
  state().ops->abs2(a, out, n);
}
cplx cdotc(const cplx* a, const cplx* b, std::size_t n) {
  return state().ops->cdotc(a, b, n);
}
double dsum(const double* a, std::size_t n) { return state().ops->dsum(a, n); }
double ddot(const double* a, const double* b, std::size_t n) {
  return state().ops->ddot(a, b, n);
}
double dasum(const double* a, std::size_t n) { return state().ops->dasum(a, n); }
PowerMoments power_moments(const double* x, const double* w, std::size_t n) {
  return state().ops->power_moments(x, w, n);
}

}  // namespace povmqm::simd
