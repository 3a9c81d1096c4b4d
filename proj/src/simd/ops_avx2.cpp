// AVX2/FMA variants.  Compiled with -mavx2 -mfma in its own TU; only
// reachable through the dispatch table after a runtime cpuid check.
//
// Register layout: one __m256d holds two complex<double> as [r0,i0,r1,i1].
// Reduction combine order is fixed (lane 0,1,2,3 then scalar tail) so a
// given backend is bitwise reproducible run to run.

#if defined(POVMQM_HAVE_AVX2)

#include <immintrin.h>

#include "ops_table.hpp"

namespace povmqm::simd::detail {

namespace {

inline __m256d cmul2(__m256d a, __m256d b) {
  __m256d b_re = _mm256_movedup_pd(b);
  __m256d b_im = _mm256_permute_pd(b, 0xF);
  __m256d a_sw = _mm256_permute_pd(a, 0x5);
  return _mm256_fmaddsub_pd(a, b_re, _mm256_mul_pd(a_sw, b_im));
}

// conj(a) * b packed as [re, im] pairs
inline __m256d cmul2_conj(__m256d a, __m256d b) {
  __m256d a_re = _mm256_movedup_pd(a);
  __m256d a_im = _mm256_permute_pd(a, 0xF);
  __m256d b_sw = _mm256_permute_pd(b, 0x5);
  return _mm256_fmsubadd_pd(a_re, b, _mm256_mul_pd(a_im, b_sw));
}

void a_cmul_inplace(cplx* a, const cplx* b, std::size_t n) {
  double* pa = reinterpret_cast<double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d va = _mm256_loadu_pd(pa + 2 * i);
    __m256d vb = _mm256_loadu_pd(pb + 2 * i);
    _mm256_storeu_pd(pa + 2 * i, cmul2(va, vb));
  }
  for (; i < n; ++i) a[i] *= b[i];
}

void a_cmul_real_inplace(cplx* a, const double* r, std::size_t n) {
  double* pa = reinterpret_cast<double*>(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vr = _mm256_loadu_pd(r + i);
    __m256d r01 = _mm256_permute4x64_pd(vr, 0x50);  // [r0,r0,r1,r1]
    __m256d r23 = _mm256_permute4x64_pd(vr, 0xFA);  // [r2,r2,r3,r3]
    __m256d v0 = _mm256_loadu_pd(pa + 2 * i);
    __m256d v1 = _mm256_loadu_pd(pa + 2 * i + 4);
    _mm256_storeu_pd(pa + 2 * i, _mm256_mul_pd(v0, r01));
    _mm256_storeu_pd(pa + 2 * i + 4, _mm256_mul_pd(v1, r23));
  }
  for (; i < n; ++i) a[i] *= r[i];
}

void a_cscale_inplace(cplx* a, double s, std::size_t n) {
  double* pa = reinterpret_cast<double*>(a);
  const __m256d vs = _mm256_set1_pd(s);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    _mm256_storeu_pd(pa + 2 * i, _mm256_mul_pd(_mm256_loadu_pd(pa + 2 * i), vs));
  }
  for (; i < n; ++i) a[i] *= s;
}

void a_abs2(const cplx* a, double* out, std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d v0 = _mm256_loadu_pd(pa + 2 * i);
    __m256d v1 = _mm256_loadu_pd(pa + 2 * i + 4);
    __m256d h = _mm256_hadd_pd(_mm256_mul_pd(v0, v0), _mm256_mul_pd(v1, v1));
    // hadd interleaves the two sources per 128-bit lane; restore order
    _mm256_storeu_pd(out + i, _mm256_permute4x64_pd(h, 0xD8));
  }
  for (; i < n; ++i)
    out[i] = a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
}

inline double reduce_fixed(__m256d acc) {
  alignas(32) double lane[4];
  _mm256_store_pd(lane, acc);
  return ((lane[0] + lane[1]) + lane[2]) + lane[3];
}

cplx a_cdotc(const cplx* a, const cplx* b, std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    acc = _mm256_add_pd(acc, cmul2_conj(_mm256_loadu_pd(pa + 2 * i),
                                        _mm256_loadu_pd(pb + 2 * i)));
  }
  alignas(32) double lane[4];
  _mm256_store_pd(lane, acc);
  double re = lane[0] + lane[2];
  double im = lane[1] + lane[3];
  for (; i < n; ++i) {
    re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
  }
  return {re, im};
}

double a_dsum(const double* a, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(a + i));
  double s = reduce_fixed(acc);
  for (; i < n; ++i) s += a[i];
  return s;
}

double a_ddot(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
  double s = reduce_fixed(acc);
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

double a_dasum(const double* a, std::size_t n) {
  const __m256d mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7FFFFFFFFFFFFFFFLL));
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_add_pd(acc, _mm256_and_pd(mask, _mm256_loadu_pd(a + i)));
  double s = reduce_fixed(acc);
  for (; i < n; ++i) s += a[i] < 0 ? -a[i] : a[i];
  return s;
}

PowerMoments a_power_moments(const double* x, const double* w, std::size_t n) {
  __m256d m0 = _mm256_setzero_pd(), m1 = m0, m2 = m0, m3 = m0, m4 = m0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vx = _mm256_loadu_pd(x + i);
    __m256d vw = _mm256_loadu_pd(w + i);
    __m256d x2 = _mm256_mul_pd(vx, vx);
    __m256d wx = _mm256_mul_pd(vw, vx);
    __m256d wx2 = _mm256_mul_pd(vw, x2);
    m0 = _mm256_add_pd(m0, vw);
    m1 = _mm256_add_pd(m1, wx);
    m2 = _mm256_add_pd(m2, wx2);
    m3 = _mm256_fmadd_pd(wx2, vx, m3);
    m4 = _mm256_fmadd_pd(wx2, x2, m4);
  }
  PowerMoments m;
  m.m0 = reduce_fixed(m0);
  m.m1 = reduce_fixed(m1);
  m.m2 = reduce_fixed(m2);
  m.m3 = reduce_fixed(m3);
  m.m4 = reduce_fixed(m4);
  for (; i < n; ++i) {
    const double xi = x[i], wi = w[i], x2 = xi * xi;
    m.m0 += wi;
    m.m1 += wi * xi;
    m.m2 += wi * x2;
    m.m3 += wi * x2 * xi;
    m.m4 += wi * x2 * x2;
  }
  return m;
}

}  // namespace

const OpsTable& avx2_table() {
  static const OpsTable t{a_cmul_inplace, a_cmul_real_inplace, a_cscale_inplace,
                          a_abs2,         a_cdotc,             a_dsum,
                          a_ddot,         a_dasum,             a_power_moments};
  return t;
}

}  // namespace povmqm::simd::detail

#endif  // POVMQM_HAVE_AVX2
