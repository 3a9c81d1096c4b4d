#pragma once

#include <complex>
#include <memory>
#include <span>
#include <vector>

#include "povmqm/grid.hpp"

namespace povmqm {

using cplx = std::complex<double>;

/// One momentum axis: n points, spacing dp, centered at zero.
struct AxisSpec {
  std::size_t n;
  double dp;
};

/// Centered discrete Fourier transforms between the momentum grid and its
/// dual position grid, in the e^{+ipx/hbar} convention for momentum ->
/// position.  The centering phases reduce to (-1)^(digit sum) sign flips
/// because N dp dx = 2 pi hbar; the flips and scale factors are folded into
/// cached real multiplier vectors.
///
/// Four transforms:
///   to_position : psi(x)  = (2 pi hbar)^(-d/2) sum psi~(p) e^{+ipx/h} dp^d
///   to_momentum : psi~(p) = (2 pi hbar)^(-d/2) sum psi(x) e^{-ipx/h} dx^d
///   forward_q   : T(q)    = (2 pi hbar)^(-d)   sum h(x)   e^{-iqx/h} dx^d
///   inverse_q   : h(x)    =                    sum T(q)   e^{+iqx/h} dq^d
/// forward_q/inverse_q are mutually inverse, as are the first two.
class FourierEngine {
 public:
  FourierEngine(std::vector<AxisSpec> axes, double hbar);
  explicit FourierEngine(const MomentumGrid& grid);
  ~FourierEngine();

  FourierEngine(const FourierEngine&) = delete;
  FourierEngine& operator=(const FourierEngine&) = delete;

  std::size_t size() const { return size_; }
  int dim() const { return int(axes_.size()); }
  const std::vector<AxisSpec>& axes() const { return axes_; }
  double hbar() const { return hbar_; }

  void to_position(std::span<const cplx> mom, std::span<cplx> pos) const;
  void to_momentum(std::span<const cplx> pos, std::span<cplx> mom) const;
  void forward_q(std::span<const cplx> field, std::span<cplx> coeff) const;
  void inverse_q(std::span<const cplx> coeff, std::span<cplx> field) const;

  std::vector<cplx> to_position(std::span<const cplx> mom) const;
  std::vector<cplx> to_momentum(std::span<const cplx> pos) const;

  /// Real-field helpers for the q-space smoothing pipeline.
  std::vector<cplx> forward_q_real(std::span<const double> field) const;
  std::vector<double> inverse_q_real(std::span<const cplx> coeff) const;

  /// Linear index of the mirrored grid point q -> -q (Nyquist cells map to
  /// themselves under the cyclic wrap).
  std::size_t mirror_index(std::size_t linear) const;

 private:
  struct Impl;
  void run(std::span<const cplx> in, std::span<cplx> out, bool backward,
           double scale) const;

  std::vector<AxisSpec> axes_;
  double hbar_;
  std::size_t size_;
  std::vector<double> sign_;  // (-1)^(sum of index digits)
  std::unique_ptr<Impl> impl_;
};

}  // namespace povmqm
