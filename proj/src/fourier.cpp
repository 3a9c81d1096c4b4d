#include "povmqm/fourier.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>

#include "povmqm/simd/ops.hpp"

namespace povmqm {

namespace {
// FFTW plan creation is not thread-safe; execution on distinct buffers is.
std::mutex planner_mutex;
}  // namespace

struct FourierEngine::Impl {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
  ~Impl() {
    std::lock_guard<std::mutex> lock(planner_mutex);
    if (forward) fftw_destroy_plan(forward);
    if (backward) fftw_destroy_plan(backward);
  }
};

FourierEngine::FourierEngine(std::vector<AxisSpec> axes, double hbar)
    : axes_(std::move(axes)), hbar_(hbar), impl_(std::make_unique<Impl>()) {
  if (axes_.empty() || axes_.size() > 6)
    throw ValidationError("transform rank must be between 1 and 6");
  size_ = 1;
  for (const auto& ax : axes_) {
    if (ax.n < 4 || (ax.n & (ax.n - 1)) != 0)
      throw ValidationError("axis length must be a power of two >= 4");
    size_ *= ax.n;
  }

  sign_.resize(size_);
  for (std::size_t m = 0; m < size_; ++m) {
    std::size_t rem = m;
    std::size_t digit_sum = 0;
    for (std::size_t a = axes_.size(); a-- > 0;) {
      digit_sum += rem % axes_[a].n;
      rem /= axes_[a].n;
    }
    sign_[m] = (digit_sum % 2 == 0) ? 1.0 : -1.0;
  }

  std::vector<int> dims(axes_.size());
  for (std::size_t a = 0; a < axes_.size(); ++a) dims[a] = int(axes_[a].n);

  std::vector<cplx> probe(size_);
  auto* buf = reinterpret_cast<fftw_complex*>(probe.data());
  std::lock_guard<std::mutex> lock(planner_mutex);
  impl_->forward = fftw_plan_dft(int(dims.size()), dims.data(), buf, buf,
                                 FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
  impl_->backward = fftw_plan_dft(int(dims.size()), dims.data(), buf, buf,
                                  FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (impl_->forward == nullptr || impl_->backward == nullptr)
    throw ValidationError("fftw plan creation failed");
}

FourierEngine::FourierEngine(const MomentumGrid& grid)
    : FourierEngine(std::vector<AxisSpec>(std::size_t(grid.dim()),
                                          AxisSpec{grid.points_per_axis(), grid.dp()}),
                    grid.hbar()) {}

FourierEngine::~FourierEngine() = default;

void FourierEngine::run(std::span<const cplx> in, std::span<cplx> out,
                        bool backward, double scale) const {
  if (in.size() != size_ || out.size() != size_)
    throw ValidationError("transform buffer size mismatch");
  if (out.data() != in.data()) std::copy(in.begin(), in.end(), out.begin());
  simd::cmul_real_inplace(out.data(), sign_.data(), size_);
  auto* buf = reinterpret_cast<fftw_complex*>(out.data());
  fftw_execute_dft(backward ? impl_->backward : impl_->forward, buf, buf);
  simd::cmul_real_inplace(out.data(), sign_.data(), size_);
  simd::cscale_inplace(out.data(), scale, size_);
}

void FourierEngine::to_position(std::span<const cplx> mom, std::span<cplx> pos) const {
  double scale = 1.0;
  for (const auto& ax : axes_) scale *= ax.dp / std::sqrt(2.0 * std::numbers::pi * hbar_);
  run(mom, pos, /*backward=*/true, scale);
}

void FourierEngine::to_momentum(std::span<const cplx> pos, std::span<cplx> mom) const {
  double scale = 1.0;
  for (const auto& ax : axes_) {
    const double dx = 2.0 * std::numbers::pi * hbar_ / (double(ax.n) * ax.dp);
    scale *= dx / std::sqrt(2.0 * std::numbers::pi * hbar_);
  }
  run(pos, mom, /*backward=*/false, scale);
}

void FourierEngine::forward_q(std::span<const cplx> field, std::span<cplx> coeff) const {
  double scale = 1.0;
  for (const auto& ax : axes_) {
    const double dx = 2.0 * std::numbers::pi * hbar_ / (double(ax.n) * ax.dp);
    scale *= dx / (2.0 * std::numbers::pi * hbar_);
  }
  run(field, coeff, /*backward=*/false, scale);
}

void FourierEngine::inverse_q(std::span<const cplx> coeff, std::span<cplx> field) const {
  double scale = 1.0;
  for (const auto& ax : axes_) scale *= ax.dp;
  run(coeff, field, /*backward=*/true, scale);
}

std::vector<cplx> FourierEngine::to_position(std::span<const cplx> mom) const {
  std::vector<cplx> out(size_);
  to_position(mom, out);
  return out;
}

std::vector<cplx> FourierEngine::to_momentum(std::span<const cplx> pos) const {
  std::vector<cplx> out(size_);
  to_momentum(pos, out);
  return out;
}

std::vector<cplx> FourierEngine::forward_q_real(std::span<const double> field) const {
  std::vector<cplx> tmp(size_);
  for (std::size_t i = 0; i < size_; ++i) tmp[i] = field[i];
  std::vector<cplx> out(size_);
  forward_q(tmp, out);
  return out;
}

std::vector<double> FourierEngine::inverse_q_real(std::span<const cplx> coeff) const {
  std::vector<cplx> tmp(size_);
  inverse_q(coeff, tmp);
  std::vector<double> out(size_);
  for (std::size_t i = 0; i < size_; ++i) out[i] = tmp[i].real();
  return out;
}

std::size_t FourierEngine::mirror_index(std::size_t linear) const {
  std::size_t out = 0;
  std::size_t rem = linear;
  // decompose row-major, mirror each digit as (n - j) mod n, recompose
  std::size_t stride = 1;
  for (std::size_t a = axes_.size(); a-- > 0;) {
    const std::size_t n = axes_[a].n;
    const std::size_t j = rem % n;
    rem /= n;
    out += ((n - j) % n) * stride;
    stride *= n;
  }
  return out;
}

}  // namespace povmqm
