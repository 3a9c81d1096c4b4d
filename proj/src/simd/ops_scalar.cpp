// Scalar reference kernels.  These define the semantics; the SIMD variants
// must match them within a few ulp (elementwise ops) or reassociation
// tolerance (reductions).

#include "ops_table.hpp"

namespace povmqm::simd::detail {

namespace {

void s_cmul_inplace(cplx* a, const cplx* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) a[i] *= b[i];
}

void s_cmul_real_inplace(cplx* a, const double* r, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) a[i] *= r[i];
}

void s_cscale_inplace(cplx* a, double s, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) a[i] *= s;
}

void s_abs2(const cplx* a, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    out[i] = a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
}

cplx s_cdotc(const cplx* a, const cplx* b, std::size_t n) {
  double re = 0, im = 0;
  for (std::size_t i = 0; i < n; ++i) {
    re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
  }
  return {re, im};
}

double s_dsum(const double* a, std::size_t n) {
  double s = 0;
  for (std::size_t i = 0; i < n; ++i) s += a[i];
  return s;
}

double s_ddot(const double* a, const double* b, std::size_t n) {
  double s = 0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

double s_dasum(const double* a, std::size_t n) {
  double s = 0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] < 0 ? -a[i] : a[i];
  return s;
}

PowerMoments s_power_moments(const double* x, const double* w, std::size_t n) {
  PowerMoments m;
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = x[i], wi = w[i];
    const double x2 = xi * xi;
    m.m0 += wi;
    m.m1 += wi * xi;
    m.m2 += wi * x2;
    m.m3 += wi * x2 * xi;
    m.m4 += wi * x2 * x2;
  }
  return m;
}

}  // namespace

const OpsTable& scalar_table() {
  static const OpsTable t{s_cmul_inplace, s_cmul_real_inplace, s_cscale_inplace,
                          s_abs2,         s_cdotc,             s_dsum,
                          s_ddot,         s_dasum,             s_power_moments};
  return t;
}

}  // namespace povmqm::simd::detail
