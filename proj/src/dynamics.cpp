#include "povmqm/dynamics.hpp"

#include <cmath>
#include <iostream>
#include <numbers>

#include "povmqm/simd/ops.hpp"

namespace povmqm {

namespace {

constexpr std::size_t kDenseLimit = 4096;

double two_pi_hbar_pow(double hbar, int d) {
  double b = 2.0 * std::numbers::pi * hbar;
  double r = 1.0;
  for (int i = 0; i < d; ++i) r *= b;
  return r;
}

double cell_volume_p(const MomentumGrid& g) {
  double v = 1.0;
  for (int a = 0; a < g.dim(); ++a) v *= g.dp();
  return v;
}

double cell_volume_x(const MomentumGrid& g) {
  double v = 1.0;
  for (int a = 0; a < g.dim(); ++a) v *= g.dx();
  return v;
}

double max_kinetic(const MomentumGrid& g, double mass) {
  const double c = g.momentum_cutoff();
  return double(g.dim()) * c * c / (2.0 * mass);
}

std::vector<double> kinetic_values(const MomentumGrid& g, double mass) {
  std::vector<double> t(g.size());
  for (std::size_t m = 0; m < t.size(); ++m) {
    double s = 0.0;
    for (int a = 0; a < g.dim(); ++a) {
      const double p = g.momentum(g.axis_index(m, a));
      s += p * p;
    }
    t[m] = s / (2.0 * mass);
  }
  return t;
}

}  // namespace

HamiltonianMatrix build_hamiltonian(const MomentumGrid& grid, const PotentialSpec& V,
                                    const RadialKernel& k, double mass,
                                    HamiltonianAssembly assembly) {
  if (mass <= 0) throw ValidationError("mass must be positive");
  if (grid.dim() > 2)
    throw ValidationError("dense assembly supports d = 1 or 2");
  if (k.dim() != grid.dim()) throw ValidationError("kernel/grid dimension mismatch");
  const std::size_t total = grid.size();
  if (total > kDenseLimit)
    throw ValidationError("dense assembly memory guard: N^d must be <= 4096");

  FourierEngine engine(grid);
  // Fourier data of the sampled potential; periodic in q with period N dp,
  // so it also covers the true-difference lattice.
  auto vq = engine.forward_q_real(V.samples(grid));
  const double tph = two_pi_hbar_pow(grid.hbar(), grid.dim());
  simd::cscale_inplace(vq.data(), tph, vq.size());

  const std::size_t n = grid.points_per_axis();
  const double dpv = cell_volume_p(grid);
  const auto kin = kinetic_values(grid, mass);

  HamiltonianMatrix out{Eigen::MatrixXcd(total, total), grid, mass, k.describe(),
                        V.describe(), 0.0};
  const double ndp = double(n) * grid.dp();
  for (std::size_t i = 0; i < total; ++i) {
    for (std::size_t j = 0; j < total; ++j) {
      double r2 = 0.0;
      std::size_t vq_index = 0;
      std::size_t stride = 1;
      // difference digits from innermost axis outwards
      std::size_t ii = i, jj = j;
      for (int a = grid.dim() - 1; a >= 0; --a) {
        const long di = long(ii % n) - long(jj % n);
        ii /= n;
        jj /= n;
        double dq = double(di) * grid.dp();
        if (assembly == HamiltonianAssembly::cyclic) {
          if (dq >= 0.5 * ndp) dq -= ndp;
          if (dq < -0.5 * ndp) dq += ndp;
        }
        r2 += dq * dq;
        const std::size_t t = std::size_t((di + long(n) + long(n) / 2) % long(n));
        vq_index += t * stride;
        stride *= n;
      }
      // V acts as Vraw(p_j - p_i): the convention that reduces to the
      // standard momentum-space equation (equal to Vraw(p_i - p_j) for
      // even potentials)
      out.matrix(Eigen::Index(i), Eigen::Index(j)) =
          k(std::sqrt(r2)) * std::conj(vq[vq_index]) * dpv;
    }
    out.matrix(Eigen::Index(i), Eigen::Index(i)) += kin[i];
  }

  double max_abs = 0.0, max_dev = 0.0;
  for (std::size_t i = 0; i < total; ++i)
    for (std::size_t j = i; j < total; ++j) {
      const cplx a = out.matrix(Eigen::Index(i), Eigen::Index(j));
      const cplx b = out.matrix(Eigen::Index(j), Eigen::Index(i));
      max_abs = std::max(max_abs, std::abs(a));
      max_dev = std::max(max_dev, std::abs(a - std::conj(b)));
    }
  out.hermiticity_error = max_abs > 0 ? max_dev / max_abs : 0.0;
  return out;
}

SpectrumResult eigensolve(const HamiltonianMatrix& h, std::size_t count) {
  const std::size_t dim = std::size_t(h.matrix.rows());
  if (count > dim) throw ValidationError("requested more eigenpairs than the dimension");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.matrix);
  if (solver.info() != Eigen::Success)
    throw NumericalGuardError("dense hermitian eigensolver failed to converge");

  const double scale =
      std::max(std::abs(solver.eigenvalues()(0)),
               std::abs(solver.eigenvalues()(Eigen::Index(dim) - 1)));

  SpectrumResult res;
  const double dpv = cell_volume_p(h.grid);
  for (std::size_t i = 0; i < count; ++i) {
    const double e = solver.eigenvalues()(Eigen::Index(i));
    Eigen::VectorXcd v = solver.eigenvectors().col(Eigen::Index(i));
    const double resid = (h.matrix * v - e * v).norm() / std::max(scale, 1e-300);
    res.eigenvalues.push_back(e);
    res.residuals.push_back(resid);
    std::vector<cplx> amp(dim);
    const double norm = 1.0 / std::sqrt(dpv);
    for (std::size_t m = 0; m < dim; ++m) amp[m] = v(Eigen::Index(m)) * norm;
    res.states.emplace_back(h.grid, std::move(amp));
  }
  return res;
}

double oscillator_spectrum_analytic(int d, double omega, double mass, double l0,
                                    std::span<const int> level, double hbar) {
  if (int(level.size()) != d) throw ValidationError("level multi-index size != d");
  double e = 0.0;
  for (int a = 0; a < d; ++a) {
    if (level[a] < 0) throw ValidationError("quantum numbers must be nonnegative");
    e += (double(level[a]) + 0.5) * hbar * omega;
  }
  return e + 0.5 * double(d) * mass * l0 * l0 * omega * omega;
}

std::vector<SpectrumCheckRow> oscillator_spectrum_check(const MomentumGrid& grid,
                                                        double omega, double mass,
                                                        const RadialKernel& k,
                                                        std::size_t count) {
  const auto V = PotentialSpec::harmonic(mass, omega);
  const auto h = build_hamiltonian(grid, V, k, mass);
  const auto spec = eigensolve(h, count);

  // analytic ladder, ascending with degeneracy
  std::vector<double> analytic;
  const double shift = 0.5 * double(grid.dim()) * mass * k.l0() * k.l0() * omega * omega;
  for (int s = 0; analytic.size() < count; ++s) {
    std::size_t degeneracy = 1;  // number of multi-indices with digit sum s
    if (grid.dim() == 2) degeneracy = std::size_t(s + 1);
    if (grid.dim() == 3) degeneracy = std::size_t((s + 1) * (s + 2) / 2);
    const double e =
        (double(s) + 0.5 * double(grid.dim())) * grid.hbar() * omega + shift;
    for (std::size_t c = 0; c < degeneracy && analytic.size() < count; ++c)
      analytic.push_back(e);
  }

  if (analytic.back() > 0.5 * max_kinetic(grid, mass))
    std::cerr << "[povmqm] warning: requested oscillator levels approach the grid "
                 "kinetic cutoff; high states may leak\n";

  std::vector<SpectrumCheckRow> rows;
  for (std::size_t i = 0; i < count; ++i)
    rows.push_back({spec.eigenvalues[i], analytic[i],
                    spec.eigenvalues[i] - analytic[i]});
  return rows;
}

PotentialSpec effective_potential(const PotentialSpec& V, const RadialKernel& k,
                                  const MomentumGrid& grid) {
  require_profile_resolved(k, grid);
  return PotentialSpec::tabulated(detail::veff_samples(V, k, grid));
}

namespace {

struct SnapshotObservables {
  std::vector<double> mean_x, mean_p, delta_x, delta_p;  // per axis
  double norm = 0, x4 = 0;
};

SnapshotObservables snapshot_observables(const FourierEngine& engine,
                                         const MomentumGrid& grid,
                                         const WaveState& s, double l0,
                                         double profile_m4) {
  SnapshotObservables out;
  const auto psi_x = engine.to_position(s.amplitudes());
  std::vector<double> hx(psi_x.size()), hp(psi_x.size());
  simd::abs2(psi_x.data(), hx.data(), hx.size());
  simd::abs2(s.amplitudes().data(), hp.data(), hp.size());
  for (int a = 0; a < grid.dim(); ++a) {
    const auto sx = detail::axis_power_sums(grid, hx, a, true);
    const auto sp = detail::axis_power_sums(grid, hp, a, false);
    out.mean_x.push_back(sx.m1 / sx.m0);
    out.mean_p.push_back(sp.m1 / sp.m0);
    const double var_x = sx.m2 / sx.m0 - out.mean_x.back() * out.mean_x.back();
    const double var_p = sp.m2 / sp.m0 - out.mean_p.back() * out.mean_p.back();
    out.delta_x.push_back(std::sqrt(l0 * l0 + var_x));
    out.delta_p.push_back(std::sqrt(std::max(0.0, var_p)));
    if (a == 0) {
      out.norm = sp.m0;
      out.x4 = sx.m4 / sx.m0 + 6.0 * l0 * l0 * sx.m2 / sx.m0 + profile_m4;
    }
  }
  return out;
}

}  // namespace

TrajectoryRecord propagate(const WaveState& initial, const PotentialSpec* V,
                           const RadialKernel& k, double mass, double dt,
                           std::size_t steps, std::size_t snapshot_stride) {
  if (mass <= 0) throw ValidationError("mass must be positive");
  if (dt <= 0) throw ValidationError("time step must be positive");
  if (steps == 0) throw ValidationError("need at least one step");
  if (snapshot_stride == 0) throw ValidationError("snapshot stride must be >= 1");
  const auto& grid = initial.grid();
  if (k.dim() != grid.dim()) throw ValidationError("kernel/grid dimension mismatch");
  const double hbar = grid.hbar();
  if (dt * max_kinetic(grid, mass) / hbar > 0.1)
    throw NumericalGuardError(
        "step-size guard: dt (max kinetic)/hbar exceeds 0.1; shrink dt or the "
        "momentum cutoff");

  FourierEngine engine(grid);
  const auto kin = kinetic_values(grid, mass);
  const std::size_t total = grid.size();
  std::vector<cplx> half_kinetic(total), vphase;
  for (std::size_t m = 0; m < total; ++m)
    half_kinetic[m] = std::polar(1.0, -kin[m] * dt / (2.0 * hbar));
  if (V != nullptr) {
    const auto veff = detail::veff_samples(*V, k, grid);
    vphase.resize(total);
    for (std::size_t m = 0; m < total; ++m)
      vphase[m] = std::polar(1.0, -veff[m] * dt / hbar);
  }

  TrajectoryRecord traj;
  traj.dt = dt;
  traj.mass = mass;
  traj.stride = snapshot_stride;
  traj.mean_x.assign(std::size_t(grid.dim()), {});
  traj.mean_p.assign(std::size_t(grid.dim()), {});
  traj.delta_x.assign(std::size_t(grid.dim()), {});
  traj.delta_p.assign(std::size_t(grid.dim()), {});

  const double l0 = k.l0();
  const double pm4 = k.profile_moment4();
  auto record = [&](const WaveState& s) {
    traj.times.push_back(s.time());
    auto obs = snapshot_observables(engine, grid, s, l0, pm4);
    for (int a = 0; a < grid.dim(); ++a) {
      traj.mean_x[std::size_t(a)].push_back(obs.mean_x[std::size_t(a)]);
      traj.mean_p[std::size_t(a)].push_back(obs.mean_p[std::size_t(a)]);
      traj.delta_x[std::size_t(a)].push_back(obs.delta_x[std::size_t(a)]);
      traj.delta_p[std::size_t(a)].push_back(obs.delta_p[std::size_t(a)]);
    }
    traj.norm.push_back(std::sqrt(obs.norm));
    traj.x4.push_back(obs.x4);
    traj.snapshots.push_back(s);
  };

  WaveState state = initial;
  record(state);
  std::vector<cplx> pos(total);
  for (std::size_t step = 1; step <= steps; ++step) {
    auto amp = state.amplitudes();
    if (V == nullptr) {
      // kinetic-only evolution is an exact phase
      simd::cmul_inplace(amp.data(), half_kinetic.data(), total);
      simd::cmul_inplace(amp.data(), half_kinetic.data(), total);
    } else {
      simd::cmul_inplace(amp.data(), half_kinetic.data(), total);
      engine.to_position(amp, pos);
      simd::cmul_inplace(pos.data(), vphase.data(), total);
      engine.to_momentum(pos, amp);
      simd::cmul_inplace(amp.data(), half_kinetic.data(), total);
    }
    state.set_time(initial.time() + double(step) * dt);
    const double drift = std::abs(std::sqrt(state.norm_squared()) - 1.0);
    if (drift > 1e-6)
      throw NumericalGuardError("norm drift " + std::to_string(drift) +
                                " exceeded 1e-6 during propagation");
    if (step % snapshot_stride == 0) record(state);
  }
  return traj;
}

WaveState propagate_dense(const WaveState& initial, const PotentialSpec& V,
                          const RadialKernel& k, double mass, double t) {
  const auto& grid = initial.grid();
  if (grid.size() > 1024)
    throw ValidationError("dense exponential cross-check limited to N^d <= 1024");
  const auto h = build_hamiltonian(grid, V, k, mass, HamiltonianAssembly::cyclic);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.matrix);
  if (solver.info() != Eigen::Success)
    throw NumericalGuardError("dense exponential: eigensolver failed");

  const std::size_t total = grid.size();
  Eigen::VectorXcd amp(total);
  for (std::size_t m = 0; m < total; ++m) amp(Eigen::Index(m)) = initial.amplitudes()[m];
  Eigen::VectorXcd coeff = solver.eigenvectors().adjoint() * amp;
  for (std::size_t i = 0; i < total; ++i)
    coeff(Eigen::Index(i)) *=
        std::polar(1.0, -solver.eigenvalues()(Eigen::Index(i)) * t / grid.hbar());
  Eigen::VectorXcd evolved = solver.eigenvectors() * coeff;
  std::vector<cplx> out(total);
  for (std::size_t m = 0; m < total; ++m) out[m] = evolved(Eigen::Index(m));
  return WaveState(grid, std::move(out), initial.time() + t);
}

double ehrenfest_check(const TrajectoryRecord& traj, const PotentialSpec& V,
                       const RadialKernel& k) {
  if (traj.snapshots.size() < 5)
    throw ValidationError("ehrenfest check needs at least five snapshots");
  const double h = traj.dt * double(traj.stride);
  const auto& grid = traj.snapshots[0].grid();
  const double dv = cell_volume_x(grid);
  const double m_used = traj.mass;

  std::vector<std::vector<double>> grad(std::size_t(grid.dim()));
  for (int a = 0; a < grid.dim(); ++a) grad[std::size_t(a)] = V.gradient_samples(grid, a);

  double worst = 0.0;
  for (std::size_t t = 1; t + 1 < traj.snapshots.size(); ++t) {
    const auto rho = position_density(traj.snapshots[t], k);
    for (int a = 0; a < grid.dim(); ++a) {
      const double d2 = (traj.mean_x[std::size_t(a)][t + 1] -
                         2.0 * traj.mean_x[std::size_t(a)][t] +
                         traj.mean_x[std::size_t(a)][t - 1]) /
                        (h * h);
      const double force =
          simd::ddot(grad[std::size_t(a)].data(), rho.rho.data(), rho.rho.size()) * dv;
      worst = std::max(worst, std::abs(m_used * d2 + force));
    }
  }
  return worst;
}

}  // namespace povmqm
