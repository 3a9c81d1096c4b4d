// NEON variants (aarch64).  vld2q de-interleaves [re,im] pairs, which keeps
// the complex arithmetic in plain fused multiply-adds.

#if defined(__aarch64__)

#include <arm_neon.h>

#include "ops_table.hpp"

namespace povmqm::simd::detail {

namespace {

void n_cmul_inplace(cplx* a, const cplx* b, std::size_t n) {
  double* pa = reinterpret_cast<double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2x2_t va = vld2q_f64(pa + 2 * i);
    float64x2x2_t vb = vld2q_f64(pb + 2 * i);
    float64x2x2_t r;
    r.val[0] = vfmsq_f64(vmulq_f64(va.val[0], vb.val[0]), va.val[1], vb.val[1]);
    r.val[1] = vfmaq_f64(vmulq_f64(va.val[0], vb.val[1]), va.val[1], vb.val[0]);
    vst2q_f64(pa + 2 * i, r);
  }
  for (; i < n; ++i) a[i] *= b[i];
}

void n_cmul_real_inplace(cplx* a, const double* r, std::size_t n) {
  double* pa = reinterpret_cast<double*>(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2x2_t va = vld2q_f64(pa + 2 * i);
    float64x2_t vr = vld1q_f64(r + i);
    va.val[0] = vmulq_f64(va.val[0], vr);
    va.val[1] = vmulq_f64(va.val[1], vr);
    vst2q_f64(pa + 2 * i, va);
  }
  for (; i < n; ++i) a[i] *= r[i];
}

void n_cscale_inplace(cplx* a, double s, std::size_t n) {
  double* pa = reinterpret_cast<double*>(a);
  const float64x2_t vs = vdupq_n_f64(s);
  std::size_t i = 0;
  for (; i + 1 <= n; i += 1) {
    vst1q_f64(pa + 2 * i, vmulq_f64(vld1q_f64(pa + 2 * i), vs));
  }
}

void n_abs2(const cplx* a, double* out, std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2x2_t va = vld2q_f64(pa + 2 * i);
    vst1q_f64(out + i, vfmaq_f64(vmulq_f64(va.val[0], va.val[0]), va.val[1], va.val[1]));
  }
  for (; i < n; ++i)
    out[i] = a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
}

inline double reduce_fixed(float64x2_t acc) {
  return vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
}

cplx n_cdotc(const cplx* a, const cplx* b, std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  float64x2_t re = vdupq_n_f64(0), im = vdupq_n_f64(0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2x2_t va = vld2q_f64(pa + 2 * i);
    float64x2x2_t vb = vld2q_f64(pb + 2 * i);
    re = vfmaq_f64(vfmaq_f64(re, va.val[0], vb.val[0]), va.val[1], vb.val[1]);
    im = vfmsq_f64(vfmaq_f64(im, va.val[0], vb.val[1]), va.val[1], vb.val[0]);
  }
  double sre = reduce_fixed(re), sim = reduce_fixed(im);
  for (; i < n; ++i) {
    sre += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    sim += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
  }
  return {sre, sim};
}

double n_dsum(const double* a, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) acc = vaddq_f64(acc, vld1q_f64(a + i));
  double s = reduce_fixed(acc);
  for (; i < n; ++i) s += a[i];
  return s;
}

double n_ddot(const double* a, const double* b, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
    acc = vfmaq_f64(acc, vld1q_f64(a + i), vld1q_f64(b + i));
  double s = reduce_fixed(acc);
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

double n_dasum(const double* a, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) acc = vaddq_f64(acc, vabsq_f64(vld1q_f64(a + i)));
  double s = reduce_fixed(acc);
  for (; i < n; ++i) s += a[i] < 0 ? -a[i] : a[i];
  return s;
}

PowerMoments n_power_moments(const double* x, const double* w, std::size_t n) {
  float64x2_t m0 = vdupq_n_f64(0), m1 = m0, m2 = m0, m3 = m0, m4 = m0;
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t vx = vld1q_f64(x + i);
    float64x2_t vw = vld1q_f64(w + i);
    float64x2_t x2 = vmulq_f64(vx, vx);
    float64x2_t wx = vmulq_f64(vw, vx);
    float64x2_t wx2 = vmulq_f64(vw, x2);
    m0 = vaddq_f64(m0, vw);
    m1 = vaddq_f64(m1, wx);
    m2 = vaddq_f64(m2, wx2);
    m3 = vfmaq_f64(m3, wx2, vx);
    m4 = vfmaq_f64(m4, wx2, x2);
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

const OpsTable& neon_table() {
  static const OpsTable t{n_cmul_inplace, n_cmul_real_inplace, n_cscale_inplace,
                          n_abs2,         n_cdotc,             n_dsum,
                          n_ddot,         n_dasum,             n_power_moments};
  return t;
}

}  // namespace povmqm::simd::detail

#endif  // __aarch64__
