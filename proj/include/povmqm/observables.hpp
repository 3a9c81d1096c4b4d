#pragma once

#include <optional>
#include <span>
#include <vector>

#include "povmqm/kernels.hpp"
#include "povmqm/potential.hpp"
#include "povmqm/wavefunction.hpp"

namespace povmqm {

/// Position probability density on the dual grid.  Nonnegative up to a
/// rounding floor; negatives above -1e-12 (relative to the peak) are
/// clamped to zero and counted.
struct DensityField {
  MomentumGrid grid;
  std::vector<double> rho;
  double norm_error = 0.0;      // |integral - 1|
  std::size_t clamped_cells = 0;
  double min_value = 0.0;       // before clamping
};

struct CurrentField {
  MomentumGrid grid;
  std::vector<std::vector<double>> component;  // [axis][cell]
};

struct UncertaintyAxis {
  double mean_x = 0, mean_x2 = 0, delta_x = 0;
  double mean_p = 0, delta_p = 0;
  double bound = 0;  // sqrt(hbar^2/4 + l0^2 dp^2)
};

struct UncertaintyReport {
  std::vector<UncertaintyAxis> axis;
  double l0 = 0;
  bool violation = false;  // delta_x delta_p < bound - 1e-10 on some axis
};

/// rho(x) = |psi(x)|^2 convolved with the kernel's smoothing profile,
/// evaluated spectrally: multiply the Fourier data of |psi|^2 by
/// (2 pi hbar)^d f(|q|).  Agrees with the direct double sum over (p, k)
/// pairs for boundary-decayed states.
DensityField position_density(const WaveState& state, const RadialKernel& k);

/// Free-particle current: the smoothed symmetrized (p+k)/2m form, plus a
/// longitudinal correction that repairs the momentum-torus wrap so the
/// discrete continuity equation holds exactly under kinetic evolution.
CurrentField probability_current_free(const WaveState& state, const RadialKernel& k,
                                      double mass);

/// Interacting current: free part plus the potential-difference term on the
/// q lattice, divided by |q|^2; the q = 0 cell takes the mean of its axis
/// neighbors (it never contributes to the divergence).  Acceptance is via
/// the continuity residual, not pointwise values.
CurrentField probability_current_interacting(const WaveState& state,
                                             const RadialKernel& k,
                                             const PotentialSpec& potential,
                                             double mass);

/// POVM moment <x_axis^order> via the kernel-derivative expansion
/// (order <= 4); agrees with direct quadrature of position_density.
double moment(const WaveState& state, const RadialKernel& k, int axis, int order);

UncertaintyReport uncertainty_report(const WaveState& state, const RadialKernel& k);

/// Max over interior snapshots of || (rho_{t+dt} - rho_{t-dt})/(2 dt)
/// + div J_t ||_1 dx^d.  Pass nullopt for free evolution.
double continuity_residual(std::span<const WaveState> snapshots, const RadialKernel& k,
                           const std::optional<PotentialSpec>& potential, double mass,
                           double dt);

/// Direct O(N^2) double-sum density (test oracle for the spectral path).
std::vector<double> position_density_direct(const WaveState& state,
                                            const RadialKernel& k);

namespace detail {

// Shared with the dynamics module; spectral route, no profile-resolution
// requirement.
std::vector<double> veff_samples(const PotentialSpec& potential, const RadialKernel& k,
                                 const MomentumGrid& grid);
std::vector<double> kernel_q_samples(const RadialKernel& k, const MomentumGrid& grid);

struct AxisPowerSums {
  double m0 = 0, m1 = 0, m2 = 0, m3 = 0, m4 = 0;
};
/// Marginal power sums of a field along one axis (position or momentum
/// coordinates, cell measure included).
AxisPowerSums axis_power_sums(const MomentumGrid& grid, std::span<const double> field,
                              int axis, bool position_space);

}  // namespace detail

}  // namespace povmqm
