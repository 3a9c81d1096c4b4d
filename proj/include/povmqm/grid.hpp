#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include "povmqm/errors.hpp"

namespace povmqm {

/// Uniform momentum grid, N points per axis centered at zero:
/// p_j = (j - N/2) dp.  The dual position grid has spacing
/// dx = 2 pi hbar / (N dp) and the same centering, so dx dp N = 2 pi hbar
/// holds exactly by construction.
class MomentumGrid {
 public:
  MomentumGrid(int d, std::size_t n, double dp, double hbar = 1.0)
      : d_(d), n_(n), dp_(dp), hbar_(hbar) {
    if (d < 1 || d > 3) throw ValidationError("grid dimension must be 1, 2 or 3");
    if (dp <= 0) throw ValidationError("momentum spacing must be positive");
    if (hbar <= 0) throw ValidationError("hbar must be positive");
    if (n < 4 || (n & (n - 1)) != 0)
      throw ValidationError("points per axis must be a power of two >= 4");
  }

  int dim() const { return d_; }
  std::size_t points_per_axis() const { return n_; }
  double dp() const { return dp_; }
  double hbar() const { return hbar_; }
  double dx() const { return 2.0 * std::numbers::pi * hbar_ / (double(n_) * dp_); }

  /// Highest |p| representable per axis (resolution check input).
  double momentum_cutoff() const { return 0.5 * double(n_) * dp_; }
  double box_half_width() const { return 0.5 * double(n_) * dx(); }

  double momentum(std::size_t axis_index) const {
    return (double(axis_index) - double(n_) / 2.0) * dp_;
  }
  double position(std::size_t axis_index) const {
    return (double(axis_index) - double(n_) / 2.0) * dx();
  }

  std::size_t size() const {
    std::size_t s = 1;
    for (int a = 0; a < d_; ++a) s *= n_;
    return s;
  }

  /// Digit of the row-major linear index along `axis` (axis 0 is outermost).
  std::size_t axis_index(std::size_t linear, int axis) const {
    for (int a = d_ - 1; a > axis; --a) linear /= n_;
    return linear % n_;
  }

  std::vector<double> momenta_axis() const {
    std::vector<double> p(n_);
    for (std::size_t j = 0; j < n_; ++j) p[j] = momentum(j);
    return p;
  }
  std::vector<double> positions_axis() const {
    std::vector<double> x(n_);
    for (std::size_t j = 0; j < n_; ++j) x[j] = position(j);
    return x;
  }

  bool operator==(const MomentumGrid& o) const {
    return d_ == o.d_ && n_ == o.n_ && dp_ == o.dp_ && hbar_ == o.hbar_;
  }

 private:
  int d_;
  std::size_t n_;
  double dp_;
  double hbar_;
};

}  // namespace povmqm
