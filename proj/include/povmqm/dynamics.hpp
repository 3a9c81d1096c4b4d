#pragma once

#include <Eigen/Dense>

#include <span>
#include <string>
#include <vector>

#include "povmqm/kernels.hpp"
#include "povmqm/observables.hpp"
#include "povmqm/potential.hpp"
#include "povmqm/wavefunction.hpp"

namespace povmqm {

/// Matrix element convention for the dense momentum-representation
/// Hamiltonian.  true_difference evaluates f at the true separation
/// |p_i - p_j| (the defining formula); cyclic wraps the separation onto the
/// grid torus, which makes the matrix the exact generator of the split-step
/// propagator.  The two agree for boundary-decayed states.
enum class HamiltonianAssembly { true_difference, cyclic };

struct HamiltonianMatrix {
  Eigen::MatrixXcd matrix;
  MomentumGrid grid;
  double mass = 0;
  std::string kernel_desc, potential_desc;
  double hermiticity_error = 0;  // max |H - H^dag| / max |H|
};

struct SpectrumResult {
  std::vector<double> eigenvalues;  // ascending
  std::vector<WaveState> states;
  std::vector<double> residuals;    // ||H v - E v|| / ||H||
};

struct SpectrumCheckRow {
  double numeric = 0, analytic = 0, diff = 0;
};

struct TrajectoryRecord {
  double dt = 0;           // integrator step
  double mass = 0;
  std::size_t stride = 1;  // snapshot every `stride` steps
  std::vector<double> times;
  std::vector<std::vector<double>> mean_x, mean_p, delta_x, delta_p;  // [axis][snap]
  std::vector<double> norm;
  std::vector<double> x4;  // <x_0^4>(t), recorded for inspection
  std::vector<WaveState> snapshots;
};

/// H[i][j] = delta_ij p_i^2/2m + f(|p_i - p_j|) Vraw(p_i - p_j) dp^d with
/// Vraw the Fourier data of the grid-sampled potential.  Dense assembly is
/// limited to N^d <= 4096.
HamiltonianMatrix build_hamiltonian(const MomentumGrid& grid, const PotentialSpec& V,
                                    const RadialKernel& k, double mass,
                                    HamiltonianAssembly assembly =
                                        HamiltonianAssembly::true_difference);

SpectrumResult eigensolve(const HamiltonianMatrix& h, std::size_t count);

/// E_n = sum_i (n_i + 1/2) hbar omega + (d/2) m l0^2 omega^2
double oscillator_spectrum_analytic(int d, double omega, double mass, double l0,
                                    std::span<const int> level, double hbar = 1.0);

/// Numeric oscillator levels against the closed form, ascending.
std::vector<SpectrumCheckRow> oscillator_spectrum_check(const MomentumGrid& grid,
                                                        double omega, double mass,
                                                        const RadialKernel& k,
                                                        std::size_t count);

/// V smoothed by the kernel profile, as a tabulated potential on the grid.
PotentialSpec effective_potential(const PotentialSpec& V, const RadialKernel& k,
                                  const MomentumGrid& grid);

/// Strang-split propagation: half kinetic phase in momentum space, full
/// effective-potential phase in position space, half kinetic.  Aborts on
/// norm drift above 1e-6; preconditions dt (max kinetic)/hbar <= 0.1.
TrajectoryRecord propagate(const WaveState& initial, const PotentialSpec* V,
                           const RadialKernel& k, double mass, double dt,
                           std::size_t steps, std::size_t snapshot_stride);

/// Dense matrix-exponential evolution of the cyclic Hamiltonian (the exact
/// generator of the split map); cross-check oracle for propagate.
WaveState propagate_dense(const WaveState& initial, const PotentialSpec& V,
                          const RadialKernel& k, double mass, double t);

/// Max over interior snapshots of |m d2<x>/dt2 + <grad V>_rho| per axis,
/// with <grad V> integrated against the POVM density.
double ehrenfest_check(const TrajectoryRecord& traj, const PotentialSpec& V,
                       const RadialKernel& k);

}  // namespace povmqm
