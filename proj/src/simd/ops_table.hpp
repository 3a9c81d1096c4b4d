#pragma once

#include "povmqm/simd/ops.hpp"

namespace povmqm::simd::detail {

struct OpsTable {
  void (*cmul_inplace)(cplx*, const cplx*, std::size_t);
  void (*cmul_real_inplace)(cplx*, const double*, std::size_t);
  void (*cscale_inplace)(cplx*, double, std::size_t);
  void (*abs2)(const cplx*, double*, std::size_t);
  cplx (*cdotc)(const cplx*, const cplx*, std::size_t);
  double (*dsum)(const double*, std::size_t);
  double (*ddot)(const double*, const double*, std::size_t);
  double (*dasum)(const double*, std::size_t);
  PowerMoments (*power_moments)(const double*, const double*, std::size_t);
};

const OpsTable& scalar_table();

#if defined(POVMQM_HAVE_AVX2)
const OpsTable& avx2_table();
#endif
#if defined(__aarch64__)
const OpsTable& neon_table();
#endif

}  // namespace povmqm::simd::detail
