#pragma once

#include <array>
#include <filesystem>
#include <span>
#include <vector>

#include "povmqm/fourier.hpp"
#include "povmqm/grid.hpp"

namespace povmqm {

/// Momentum-space wavefunction on a uniform grid.  This is the fundamental
/// state object; there are no position eigenstates, and the position-space
/// amplitudes obtained from it are auxiliary quantities, not probability
/// amplitudes.
class WaveState {
 public:
  WaveState(MomentumGrid grid, std::vector<cplx> amplitudes, double time = 0.0);

  const MomentumGrid& grid() const { return grid_; }
  std::span<const cplx> amplitudes() const { return amp_; }
  std::span<cplx> amplitudes() { return amp_; }
  double time() const { return time_; }
  void set_time(double t) { time_ = t; }

  /// sum |psi~|^2 dp^d
  double norm_squared() const;
  void normalize();

  /// max |psi~| on the outermost grid shell relative to the global max.
  /// Above 1e-8 the grid is likely truncating the state (warning level).
  double boundary_decay_ratio() const;

 private:
  MomentumGrid grid_;
  std::vector<cplx> amp_;
  double time_;
};

/// Normalized Gaussian packet: psi~(p) ~ exp(-sigma_x^2 |p-p0|^2 / hbar^2)
/// exp(-i p.x0 / hbar).  Position density variance is sigma_x^2 per axis and
/// sigma_x sigma_p = hbar/2.
WaveState make_gaussian_state(const MomentumGrid& grid, std::span<const double> x0,
                              std::span<const double> p0, double sigma_x);

/// Convenience overload for d = 1.
WaveState make_gaussian_state(const MomentumGrid& grid, double x0, double p0,
                              double sigma_x);

/// Auxiliary position amplitudes (Parseval-exact with the momentum norm).
std::vector<cplx> to_position_amplitudes(const WaveState& state);

/// sum conj(a~) b~ dp^d; requires identical grids.
cplx overlap(const WaveState& a, const WaveState& b);

/// Two-column (re, im) CSV with a header naming the grid parameters.
/// 17 significant digits; round-trips bit-exactly.
void save_state_csv(const WaveState& state, const std::filesystem::path& path);
WaveState load_state_csv(const std::filesystem::path& path);

}  // namespace povmqm
