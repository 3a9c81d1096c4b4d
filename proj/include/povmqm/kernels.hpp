#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "povmqm/grid.hpp"

namespace povmqm {

/// Radial profile Omega_d: the building block of isotropic positive-definite
/// functions on R^d (Omega_1 = cos, Omega_2 = J0, Omega_3 = sin(r)/r).
/// Uses a power-series branch for small r to avoid cancellation.
double omega_profile(int d, double r);

/// Discrete measure on R+ defining a kernel as sum_k w_k Omega_d(r u_k).
/// Weights are stored normalized so that sum w_k = (2 pi hbar)^(-d),
/// which pins f(0) to the value normalization of the density requires.
struct SchoenbergMeasure {
  std::vector<double> nodes;    // u_k >= 0, strictly increasing
  std::vector<double> weights;  // w_k > 0, sum = (2 pi hbar)^(-d)
};

enum class KernelFamily { constant, gaussian, schoenberg };

/// Isotropic positive-definite kernel f(|p-k|) with its derivative data.
/// Immutable after construction; all evaluation is const and thread-safe.
class RadialKernel {
 public:
  static RadialKernel constant(int d, double hbar = 1.0);
  static RadialKernel gaussian(int d, double l0, double hbar = 1.0);
  /// Relative weights are normalized to the required sum internally.
  static RadialKernel schoenberg(int d, std::vector<double> nodes,
                                 std::vector<double> relative_weights,
                                 double hbar = 1.0);

  double operator()(double r) const;  // f(r)

  int dim() const { return d_; }
  double hbar() const { return hbar_; }
  KernelFamily family() const { return family_; }
  const SchoenbergMeasure& measure() const { return measure_; }

  /// f(0) = (2 pi hbar)^(-d)
  double xi0() const;
  /// Second axis derivative of f(|q|) at q = 0 (<= 0).
  double xi2() const;
  /// Fourth axis derivative at q = 0.
  double xi4() const;

  /// Minimal position uncertainty sqrt(-xi2 (2 pi hbar)^d hbar^2).
  double l0() const;
  /// Fourth axis moment of the smoothing profile, hbar^4 xi4 (2 pi hbar)^d.
  double profile_moment4() const;

  std::string describe() const;

 private:
  RadialKernel(int d, double hbar, KernelFamily f) : d_(d), hbar_(hbar), family_(f) {}

  int d_;
  double hbar_;
  KernelFamily family_;
  double l0_param_ = 0.0;  // gaussian width parameter
  SchoenbergMeasure measure_;
};

struct GramCheckResult {
  bool psd = false;
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
  bool degenerate_points = false;  // all points identical; check still ran
};

/// Builds the Gram matrix f(|p_i - p_j|) over the point set and tests
/// min eig >= -tol * max eig.  Points are packed d-major: point i occupies
/// points[i*d .. i*d+d).
GramCheckResult gram_psd_check(const RadialKernel& k,
                               std::span<const double> points, double tol);

/// Same check for an arbitrary radial profile (used to reject candidate
/// kernels that are not positive definite in the declared dimension).
GramCheckResult gram_psd_check_fn(const std::function<double(double)>& f, int d,
                                  std::span<const double> points, double tol);

/// Throws ResolutionError unless the dual position grid resolves the kernel
/// width (dx <= l0/4 whenever l0 > 0).
void require_profile_resolved(const RadialKernel& k, const MomentumGrid& grid);

/// Position-space smoothing profile g: the Fourier transform of f, sampled
/// on the dual position grid.  Nonnegative with unit mass; the density is
/// |psi|^2 convolved with g.
std::vector<double> smoothing_profile(const RadialKernel& k, const MomentumGrid& grid);

}  // namespace povmqm
