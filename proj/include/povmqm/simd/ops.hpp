#pragma once

#include <complex>
#include <cstddef>

// Data-parallel inner loops used by the transform, density and moment
// pipelines.  Every op has a scalar reference kernel plus AVX2/NEON variants
// selected at runtime; the variants are equivalence-tested against scalar.
// Reductions use a fixed lane-wise summation order so results are
// run-to-run identical for a given backend.

namespace povmqm::simd {

using cplx = std::complex<double>;

/// a[i] *= b[i]
void cmul_inplace(cplx* a, const cplx* b, std::size_t n);

/// a[i] *= r[i]  (real multiplier array: sign patterns, spectral filters)
void cmul_real_inplace(cplx* a, const double* r, std::size_t n);

/// a[i] *= s
void cscale_inplace(cplx* a, double s, std::size_t n);

/// out[i] = |a[i]|^2
void abs2(const cplx* a, double* out, std::size_t n);

/// sum conj(a[i]) * b[i]
cplx cdotc(const cplx* a, const cplx* b, std::size_t n);

/// sum a[i]
double dsum(const double* a, std::size_t n);

/// sum a[i] * b[i]
double ddot(const double* a, const double* b, std::size_t n);

/// sum |a[i]|
double dasum(const double* a, std::size_t n);

struct PowerMoments {
  double m0 = 0, m1 = 0, m2 = 0, m3 = 0, m4 = 0;  // sum w, w x, w x^2, ...
};

/// Single-pass weighted power sums up to x^4.
PowerMoments power_moments(const double* x, const double* w, std::size_t n);

}  // namespace povmqm::simd
