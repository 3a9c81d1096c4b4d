#include "povmqm/observables.hpp"

#include <cmath>
#include <numbers>

#include "povmqm/simd/ops.hpp"

namespace povmqm {

namespace {

double two_pi_hbar_pow(double hbar, int d) {
  double b = 2.0 * std::numbers::pi * hbar;
  double r = 1.0;
  for (int i = 0; i < d; ++i) r *= b;
  return r;
}

std::vector<double> kernel_on_q_grid(const RadialKernel& k, const MomentumGrid& grid) {
  const std::size_t total = grid.size();
  std::vector<double> f(total);
  for (std::size_t m = 0; m < total; ++m) {
    double q2 = 0.0;
    for (int a = 0; a < grid.dim(); ++a) {
      const double q = grid.momentum(grid.axis_index(m, a));
      q2 += q * q;
    }
    f[m] = k(std::sqrt(q2));
  }
  return f;
}

std::vector<double> abs2_field(std::span<const cplx> a) {
  std::vector<double> out(a.size());
  simd::abs2(a.data(), out.data(), a.size());
  return out;
}

// X_j = (2 pi hbar)^d trans(conj(psi_x) g_x)_j
//     = sum_k conj(psi~_k) g~_{wrap(k + q_j)} dp^d
std::vector<cplx> correlation(const FourierEngine& engine,
                              std::span<const cplx> psi_x, std::span<const cplx> g_x,
                              double scale) {
  std::vector<cplx> prod(psi_x.size());
  for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = std::conj(psi_x[i]) * g_x[i];
  std::vector<cplx> out(prod.size());
  engine.forward_q(prod, out);
  simd::cscale_inplace(out.data(), scale, out.size());
  return out;
}

struct QGeometry {
  std::vector<double> qaxis;          // [axis][cell] flattened: axis * total + m
  std::vector<double> inv_q2;         // 1/|q|^2, q = 0 cell set to 0
  std::vector<std::size_t> mirror;    // q -> -q index map
  std::size_t center = 0;             // linear index of q = 0
  int d = 1;
  std::size_t total = 0;
};

QGeometry q_geometry(const FourierEngine& engine, const MomentumGrid& grid) {
  QGeometry geo;
  geo.d = grid.dim();
  geo.total = grid.size();
  geo.qaxis.resize(std::size_t(geo.d) * geo.total);
  geo.inv_q2.resize(geo.total);
  geo.mirror.resize(geo.total);
  std::size_t center = 0;
  for (std::size_t m = 0; m < geo.total; ++m) {
    double q2 = 0.0;
    bool zero = true;
    for (int a = 0; a < geo.d; ++a) {
      const double q = grid.momentum(grid.axis_index(m, a));
      geo.qaxis[std::size_t(a) * geo.total + m] = q;
      q2 += q * q;
      if (q != 0.0) zero = false;
    }
    geo.inv_q2[m] = zero ? 0.0 : 1.0 / q2;
    geo.mirror[m] = engine.mirror_index(m);
    if (zero) center = m;
  }
  geo.center = center;
  return geo;
}

// Difference correlation D_j = X_j - conj(X_{mir(j)}): the density-rate data
// generated by the momentum-space operator whose position action produced X.
std::vector<cplx> difference_correlation(const std::vector<cplx>& x,
                                         const std::vector<std::size_t>& mirror) {
  std::vector<cplx> d(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) d[j] = x[j] - std::conj(x[mirror[j]]);
  return d;
}

// Assign the q = 0 cell of a singular integrand the mean of its 2d axis
// neighbors.  Only regularizes the reported J; the divergence is blind to
// this cell.
void fill_center_cell(std::vector<cplx>& integrand, const MomentumGrid& grid,
                      std::size_t center) {
  cplx acc = 0.0;
  int cnt = 0;
  std::size_t stride = 1;
  for (int a = 0; a < grid.dim(); ++a) {
    acc += integrand[center + stride] + integrand[center - stride];
    cnt += 2;
    stride *= grid.points_per_axis();
  }
  integrand[center] = acc / double(cnt);
}

struct CurrentData {
  // q-space components of J, one vector per axis
  std::vector<std::vector<cplx>> jhat;
};

CurrentData current_qspace(const WaveState& state, const PotentialSpec* potential,
                           double mass, const FourierEngine& engine,
                           const QGeometry& geo, const std::vector<double>& f,
                           const std::vector<double>& veff) {
  const auto& grid = state.grid();
  const int d = grid.dim();
  const std::size_t total = geo.total;
  const double tph = two_pi_hbar_pow(grid.hbar(), d);

  const auto psi_x = engine.to_position(state.amplitudes());

  // smoothed symmetrized current, one correlation per axis
  CurrentData out;
  out.jhat.resize(std::size_t(d));
  std::vector<cplx> tmp(total);
  std::vector<cplx> sing(total, cplx(0.0));  // singular-weighted correlation sum

  // kinetic difference correlation (exact discrete density rate under T)
  {
    for (std::size_t m = 0; m < total; ++m) {
      double t = 0.0;
      for (int a = 0; a < d; ++a) {
        const double p = geo.qaxis[std::size_t(a) * total + m];
        t += p * p;
      }
      tmp[m] = state.amplitudes()[m] * (t / (2.0 * mass));
    }
    const auto chi_x = engine.to_position(tmp);
    const auto xt = correlation(engine, psi_x, chi_x, tph);
    auto dcorr = difference_correlation(xt, geo.mirror);
    for (std::size_t j = 0; j < total; ++j) sing[j] += dcorr[j];
  }

  for (int a = 0; a < d; ++a) {
    for (std::size_t m = 0; m < total; ++m)
      tmp[m] = state.amplitudes()[m] * geo.qaxis[std::size_t(a) * total + m];
    const auto pa_x = engine.to_position(tmp);
    const auto xp = correlation(engine, psi_x, pa_x, tph);
    // symmetrized correlation S = X + conj(X o mir); alpha current is
    // f S / 2m, and q.S/2m is removed from the singular part so only the
    // torus wrap correction survives there.
    auto& jh = out.jhat[std::size_t(a)];
    jh.resize(total);
    for (std::size_t j = 0; j < total; ++j) {
      const cplx s = xp[j] + std::conj(xp[geo.mirror[j]]);
      jh[j] = f[j] * s / (2.0 * mass);
      sing[j] -= geo.qaxis[std::size_t(a) * total + j] * s / (2.0 * mass);
    }
  }

  if (potential != nullptr) {
    std::vector<cplx> eta_x(total);
    for (std::size_t m = 0; m < total; ++m) eta_x[m] = veff[m] * psi_x[m];
    const auto xv = correlation(engine, psi_x, eta_x, tph);
    auto c = difference_correlation(xv, geo.mirror);
    for (std::size_t j = 0; j < total; ++j) sing[j] += c[j];
  }

  // distribute the singular part along q_i / |q|^2
  for (int a = 0; a < d; ++a) {
    std::vector<cplx> integrand(total);
    for (std::size_t j = 0; j < total; ++j)
      integrand[j] =
          f[j] * geo.qaxis[std::size_t(a) * total + j] * geo.inv_q2[j] * sing[j];
    fill_center_cell(integrand, grid, geo.center);
    auto& jh = out.jhat[std::size_t(a)];
    for (std::size_t j = 0; j < total; ++j) jh[j] += integrand[j];
  }
  return out;
}

std::vector<double> effective_potential_samples(const PotentialSpec& potential,
                                                const MomentumGrid& grid,
                                                const FourierEngine& engine,
                                                const std::vector<double>& f) {
  auto coeff = engine.forward_q_real(potential.samples(grid));
  const double tph = two_pi_hbar_pow(grid.hbar(), grid.dim());
  for (std::size_t j = 0; j < coeff.size(); ++j) coeff[j] *= tph * f[j];
  return engine.inverse_q_real(coeff);
}

}  // namespace

namespace detail {
// shared with the dynamics module
std::vector<double> veff_samples(const PotentialSpec& potential, const RadialKernel& k,
                                 const MomentumGrid& grid) {
  FourierEngine engine(grid);
  return effective_potential_samples(potential, grid, engine,
                                     kernel_on_q_grid(k, grid));
}
std::vector<double> kernel_q_samples(const RadialKernel& k, const MomentumGrid& grid) {
  return kernel_on_q_grid(k, grid);
}
}  // namespace detail

DensityField position_density(const WaveState& state, const RadialKernel& k) {
  const auto& grid = state.grid();
  if (k.dim() != grid.dim()) throw ValidationError("kernel/grid dimension mismatch");
  if (k.hbar() != grid.hbar()) throw ValidationError("kernel/grid hbar mismatch");

  FourierEngine engine(grid);
  const auto psi_x = engine.to_position(state.amplitudes());
  auto h = abs2_field(psi_x);
  auto coeff = engine.forward_q_real(h);
  const auto f = kernel_on_q_grid(k, grid);
  const double tph = two_pi_hbar_pow(grid.hbar(), grid.dim());
  for (std::size_t j = 0; j < coeff.size(); ++j) coeff[j] *= tph * f[j];

  DensityField out{grid, engine.inverse_q_real(coeff), 0.0, 0, 0.0};
  double dv = 1.0;
  for (int a = 0; a < grid.dim(); ++a) dv *= grid.dx();

  double maxv = 0.0, minv = 0.0;
  for (double v : out.rho) {
    maxv = std::max(maxv, v);
    minv = std::min(minv, v);
  }
  out.min_value = minv;
  const double floor = -1e-12 * std::max(maxv, 1.0);
  for (double& v : out.rho) {
    if (v < 0 && v >= floor) {
      v = 0.0;
      ++out.clamped_cells;
    }
  }
  out.norm_error = std::abs(simd::dsum(out.rho.data(), out.rho.size()) * dv - 1.0);
  return out;
}

std::vector<double> position_density_direct(const WaveState& state,
                                            const RadialKernel& k) {
  const auto& grid = state.grid();
  if (grid.dim() != 1)
    throw ValidationError("direct double-sum density implemented for d = 1");
  const std::size_t n = grid.points_per_axis();
  const double hbar = grid.hbar();
  const auto amp = state.amplitudes();

  std::vector<double> rho(n, 0.0);
  // A(q) on the full (2N-1)-point difference lattice, true differences
  std::vector<cplx> autocorr(2 * n - 1, cplx(0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      autocorr[std::size_t(long(i) - long(j) + long(n) - 1)] +=
          amp[i] * std::conj(amp[j]);
  const double dp2 = grid.dp() * grid.dp();
  for (std::size_t m = 0; m < n; ++m) {
    const double x = grid.position(m);
    double s = 0.0;
    for (std::size_t t = 0; t < 2 * n - 1; ++t) {
      const double q = (double(t) - double(n - 1)) * grid.dp();
      const cplx term = k(std::abs(q)) * autocorr[t] *
                        std::polar(1.0, q * x / hbar);
      s += term.real();
    }
    rho[m] = s * dp2;
  }
  return rho;
}

CurrentField probability_current_free(const WaveState& state, const RadialKernel& k,
                                      double mass) {
  if (mass <= 0) throw ValidationError("mass must be positive");
  const auto& grid = state.grid();
  if (k.dim() != grid.dim()) throw ValidationError("kernel/grid dimension mismatch");
  FourierEngine engine(grid);
  const auto geo = q_geometry(engine, grid);
  const auto f = kernel_on_q_grid(k, grid);
  auto data = current_qspace(state, nullptr, mass, engine, geo, f, {});
  CurrentField out{grid, {}};
  for (auto& jh : data.jhat) out.component.push_back(engine.inverse_q_real(jh));
  return out;
}

CurrentField probability_current_interacting(const WaveState& state,
                                             const RadialKernel& k,
                                             const PotentialSpec& potential,
                                             double mass) {
  if (mass <= 0) throw ValidationError("mass must be positive");
  const auto& grid = state.grid();
  if (k.dim() != grid.dim()) throw ValidationError("kernel/grid dimension mismatch");
  FourierEngine engine(grid);
  const auto geo = q_geometry(engine, grid);
  const auto f = kernel_on_q_grid(k, grid);
  const auto veff = effective_potential_samples(potential, grid, engine, f);
  auto data = current_qspace(state, &potential, mass, engine, geo, f, veff);
  CurrentField out{grid, {}};
  for (auto& jh : data.jhat) out.component.push_back(engine.inverse_q_real(jh));
  return out;
}

namespace detail {

AxisPowerSums axis_power_sums(const MomentumGrid& grid, std::span<const double> field,
                              int axis, bool position_space) {
  const std::size_t n = grid.points_per_axis();
  std::vector<double> marginal(n, 0.0);
  for (std::size_t m = 0; m < field.size(); ++m)
    marginal[grid.axis_index(m, axis)] += field[m];
  std::vector<double> coords(n);
  for (std::size_t j = 0; j < n; ++j)
    coords[j] = position_space ? grid.position(j) : grid.momentum(j);
  const double cell = position_space ? grid.dx() : grid.dp();
  double dv = 1.0;
  for (int a = 0; a < grid.dim(); ++a) dv *= cell;
  auto pm = simd::power_moments(coords.data(), marginal.data(), n);
  return {pm.m0 * dv, pm.m1 * dv, pm.m2 * dv, pm.m3 * dv, pm.m4 * dv};
}

}  // namespace detail

double moment(const WaveState& state, const RadialKernel& k, int axis, int order) {
  const auto& grid = state.grid();
  if (k.dim() != grid.dim()) throw ValidationError("kernel/grid dimension mismatch");
  if (axis < 0 || axis >= grid.dim()) throw ValidationError("moment axis out of range");
  if (order < 0 || order > 4)
    throw ValidationError("moment order must be 0..4 (higher orders need direct quadrature)");

  FourierEngine engine(grid);
  const auto psi_x = engine.to_position(state.amplitudes());
  const auto h = abs2_field(psi_x);
  const auto s = detail::axis_power_sums(grid, h, axis, /*position_space=*/true);

  const double l02 = k.l0() * k.l0();
  switch (order) {
    case 0: return s.m0;
    case 1: return s.m1;
    case 2: return s.m2 + l02;
    case 3: return s.m3 + 3.0 * l02 * s.m1;
    default: return s.m4 + 6.0 * l02 * s.m2 + k.profile_moment4();
  }
}

UncertaintyReport uncertainty_report(const WaveState& state, const RadialKernel& k) {
  const auto& grid = state.grid();
  if (k.dim() != grid.dim()) throw ValidationError("kernel/grid dimension mismatch");
  FourierEngine engine(grid);
  const auto psi_x = engine.to_position(state.amplitudes());
  const auto h = abs2_field(psi_x);
  std::vector<double> mom_density(state.amplitudes().size());
  simd::abs2(state.amplitudes().data(), mom_density.data(), mom_density.size());

  UncertaintyReport rep;
  rep.l0 = k.l0();
  const double hbar = grid.hbar();
  for (int a = 0; a < grid.dim(); ++a) {
    const auto sx = detail::axis_power_sums(grid, h, a, true);
    const auto sp = detail::axis_power_sums(grid, mom_density, a, false);
    UncertaintyAxis ax;
    ax.mean_x = sx.m1 / sx.m0;
    const double var_std = sx.m2 / sx.m0 - ax.mean_x * ax.mean_x;
    ax.mean_x2 = rep.l0 * rep.l0 + sx.m2 / sx.m0;
    ax.delta_x = std::sqrt(rep.l0 * rep.l0 + var_std);
    ax.mean_p = sp.m1 / sp.m0;
    ax.delta_p = std::sqrt(std::max(0.0, sp.m2 / sp.m0 - ax.mean_p * ax.mean_p));
    ax.bound = std::sqrt(hbar * hbar / 4.0 + rep.l0 * rep.l0 * ax.delta_p * ax.delta_p);
    if (ax.delta_x * ax.delta_p < ax.bound - 1e-10) rep.violation = true;
    rep.axis.push_back(ax);
  }
  return rep;
}

double continuity_residual(std::span<const WaveState> snapshots, const RadialKernel& k,
                           const std::optional<PotentialSpec>& potential, double mass,
                           double dt) {
  if (snapshots.size() < 3)
    throw ValidationError("continuity residual needs at least three snapshots");
  if (dt <= 0) throw ValidationError("snapshot spacing must be positive");
  const auto& grid = snapshots[0].grid();
  FourierEngine engine(grid);
  const auto geo = q_geometry(engine, grid);
  const auto f = kernel_on_q_grid(k, grid);
  std::vector<double> veff;
  const PotentialSpec* pot = nullptr;
  if (potential.has_value()) {
    pot = &*potential;
    veff = effective_potential_samples(*pot, grid, engine, f);
  }

  double dv = 1.0;
  for (int a = 0; a < grid.dim(); ++a) dv *= grid.dx();
  const double tph = two_pi_hbar_pow(grid.hbar(), grid.dim());

  auto rho_of = [&](const WaveState& s) {
    const auto psi_x = engine.to_position(s.amplitudes());
    auto h = abs2_field(psi_x);
    auto coeff = engine.forward_q_real(h);
    for (std::size_t j = 0; j < coeff.size(); ++j) coeff[j] *= tph * f[j];
    return engine.inverse_q_real(coeff);
  };

  double worst = 0.0;
  std::vector<double> rho_prev = rho_of(snapshots[0]);
  std::vector<double> rho_mid = rho_of(snapshots[1]);
  for (std::size_t t = 1; t + 1 < snapshots.size(); ++t) {
    std::vector<double> rho_next = rho_of(snapshots[t + 1]);
    if (!(snapshots[t].grid() == grid))
      throw ValidationError("continuity residual: snapshot grid mismatch");
    auto data = current_qspace(snapshots[t], pot, mass, engine, geo, f, veff);
    std::vector<cplx> divq(grid.size(), cplx(0.0));
    for (int a = 0; a < grid.dim(); ++a)
      for (std::size_t j = 0; j < divq.size(); ++j)
        divq[j] += cplx(0.0, geo.qaxis[std::size_t(a) * divq.size() + j] / grid.hbar()) *
                   data.jhat[std::size_t(a)][j];
    auto div = engine.inverse_q_real(divq);
    std::vector<double> err(div.size());
    for (std::size_t m = 0; m < err.size(); ++m)
      err[m] = (rho_next[m] - rho_prev[m]) / (2.0 * dt) + div[m];
    worst = std::max(worst, simd::dasum(err.data(), err.size()) * dv);
    rho_prev = std::move(rho_mid);
    rho_mid = std::move(rho_next);
  }
  return worst;
}

}  // namespace povmqm
