#include "povmqm/twobody.hpp"

#include <cmath>
#include <numbers>

#include "povmqm/observables.hpp"
#include "povmqm/simd/ops.hpp"

namespace povmqm {

ParticlePair::ParticlePair(double mass1, double mass2, RadialKernel k1, RadialKernel k2)
    : m1(mass1), m2(mass2), kernel1(std::move(k1)), kernel2(std::move(k2)) {
  if (m1 <= 0 || m2 <= 0) throw ValidationError("particle masses must be positive");
  if (kernel1.dim() != kernel2.dim())
    throw ValidationError("pair kernels must share the dimension");
  if (kernel1.hbar() != kernel2.hbar())
    throw ValidationError("pair kernels must share hbar");
}

TwoParticleState::TwoParticleState(MomentumGrid grid1, MomentumGrid grid2,
                                   std::vector<cplx> amp)
    : g1_(grid1), g2_(grid2), amp_(std::move(amp)) {
  if (g1_.dim() != 1 || g2_.dim() != 1)
    throw ValidationError("two-particle grids are 1-d per particle (desk scale)");
  if (g1_.hbar() != g2_.hbar()) throw ValidationError("grids must share hbar");
  if (g1_.points_per_axis() > 64 || g2_.points_per_axis() > 64)
    throw ValidationError("two-particle grids limited to 64 points per axis");
  if (amp_.size() != g1_.points_per_axis() * g2_.points_per_axis())
    throw ValidationError("two-particle amplitude size mismatch");
}

TwoParticleState TwoParticleState::product(const WaveState& s1, const WaveState& s2) {
  const auto& g1 = s1.grid();
  const auto& g2 = s2.grid();
  std::vector<cplx> amp(g1.size() * g2.size());
  for (std::size_t i = 0; i < g1.size(); ++i)
    for (std::size_t j = 0; j < g2.size(); ++j)
      amp[i * g2.size() + j] = s1.amplitudes()[i] * s2.amplitudes()[j];
  return TwoParticleState(g1, g2, std::move(amp));
}

double TwoParticleState::norm_squared() const {
  const cplx s = simd::cdotc(amp_.data(), amp_.data(), amp_.size());
  return s.real() * g1_.dp() * g2_.dp();
}

void TwoParticleState::normalize() {
  const double n2 = norm_squared();
  if (n2 <= 0) throw ValidationError("cannot normalize a zero state");
  simd::cscale_inplace(amp_.data(), 1.0 / std::sqrt(n2), amp_.size());
}

TwoParticleDensity two_particle_density(const TwoParticleState& state,
                                        const ParticlePair& pair) {
  const auto& g1 = state.grid1();
  const auto& g2 = state.grid2();
  if (pair.kernel1.dim() != 1 || pair.kernel2.dim() != 1)
    throw ValidationError("two-particle density needs d = 1 kernels");
  const double hbar = g1.hbar();
  if (pair.kernel1.hbar() != hbar || pair.kernel2.hbar() != hbar)
    throw ValidationError("kernel/grid hbar mismatch");

  FourierEngine engine({{g1.points_per_axis(), g1.dp()}, {g2.points_per_axis(), g2.dp()}},
                       hbar);
  const auto psi_x = engine.to_position(state.amplitudes());
  std::vector<double> h(psi_x.size());
  simd::abs2(psi_x.data(), h.data(), h.size());
  auto coeff = engine.forward_q_real(h);

  const double tph2 = std::pow(2.0 * std::numbers::pi * hbar, 2);
  const std::size_t n1 = g1.points_per_axis(), n2 = g2.points_per_axis();
  for (std::size_t j1 = 0; j1 < n1; ++j1) {
    const double f1 = pair.kernel1(std::abs(g1.momentum(j1)));
    for (std::size_t j2 = 0; j2 < n2; ++j2) {
      coeff[j1 * n2 + j2] *= tph2 * f1 * pair.kernel2(std::abs(g2.momentum(j2)));
    }
  }
  TwoParticleDensity out{g1, g2, engine.inverse_q_real(coeff), 0.0};
  const double dv = g1.dx() * g2.dx();
  out.norm_error = std::abs(simd::dsum(out.rho.data(), out.rho.size()) * dv - 1.0);
  return out;
}

std::vector<double> two_particle_density_direct(const TwoParticleState& state,
                                                const ParticlePair& pair) {
  const auto& g1 = state.grid1();
  const auto& g2 = state.grid2();
  const std::size_t n1 = g1.points_per_axis(), n2 = g2.points_per_axis();
  const double hbar = g1.hbar();
  const auto amp = state.amplitudes();

  // autocorrelation on the true (2N-1)^2 difference lattice
  const std::size_t t1n = 2 * n1 - 1, t2n = 2 * n2 - 1;
  std::vector<cplx> acorr(t1n * t2n, cplx(0.0));
  for (std::size_t i1 = 0; i1 < n1; ++i1)
    for (std::size_t i2 = 0; i2 < n2; ++i2) {
      const cplx a = amp[i1 * n2 + i2];
      for (std::size_t j1 = 0; j1 < n1; ++j1)
        for (std::size_t j2 = 0; j2 < n2; ++j2) {
          const std::size_t t1 = std::size_t(long(i1) - long(j1) + long(n1) - 1);
          const std::size_t t2 = std::size_t(long(i2) - long(j2) + long(n2) - 1);
          acorr[t1 * t2n + t2] += a * std::conj(amp[j1 * n2 + j2]);
        }
    }

  // fold axis 2 first, then axis 1, with per-axis phase tables
  std::vector<cplx> partial(t1n * n2, cplx(0.0));
  for (std::size_t t1 = 0; t1 < t1n; ++t1)
    for (std::size_t t2 = 0; t2 < t2n; ++t2) {
      const double q2 = (double(t2) - double(n2 - 1)) * g2.dp();
      const cplx w = acorr[t1 * t2n + t2] * pair.kernel2(std::abs(q2));
      for (std::size_t m2 = 0; m2 < n2; ++m2)
        partial[t1 * n2 + m2] += w * std::polar(1.0, q2 * g2.position(m2) / hbar);
    }

  std::vector<double> rho(n1 * n2, 0.0);
  const double meas = g1.dp() * g1.dp() * g2.dp() * g2.dp();
  for (std::size_t t1 = 0; t1 < t1n; ++t1) {
    const double q1 = (double(t1) - double(n1 - 1)) * g1.dp();
    const double f1 = pair.kernel1(std::abs(q1));
    for (std::size_t m1 = 0; m1 < n1; ++m1) {
      const cplx ph = std::polar(1.0, q1 * g1.position(m1) / hbar) * f1;
      for (std::size_t m2 = 0; m2 < n2; ++m2)
        rho[m1 * n2 + m2] += (ph * partial[t1 * n2 + m2]).real() * meas;
    }
  }
  return rho;
}

double separability_check(const WaveState& s1, const WaveState& s2,
                          const ParticlePair& pair) {
  const auto joint = TwoParticleState::product(s1, s2);
  const auto rho12 = two_particle_density(joint, pair);
  const auto rho1 = position_density(s1, pair.kernel1);
  const auto rho2 = position_density(s2, pair.kernel2);
  const std::size_t n1 = s1.grid().size(), n2 = s2.grid().size();
  double dev = 0.0;
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n2; ++j)
      dev = std::max(dev, std::abs(rho12.rho[i * n2 + j] - rho1.rho[i] * rho2.rho[j]));
  return dev;
}

ComSplit com_split(const ParticlePair& pair) { return ComSplit{pair.m1, pair.m2}; }

double deformed_relative_kernel(const ParticlePair& pair, double q) {
  const double hbar = pair.kernel1.hbar();
  double tph = 1.0;
  for (int i = 0; i < pair.kernel1.dim(); ++i) tph *= 2.0 * std::numbers::pi * hbar;
  return tph * pair.kernel1(std::abs(q)) * pair.kernel2(std::abs(q));
}

double relative_kernel_l0(const ParticlePair& pair) {
  const double a = pair.l1(), b = pair.l2();
  return std::sqrt(a * a + b * b);
}

namespace {

// R_{n0}(r) = (2 / n^{5/2}) e^{-r/n} L^1_{n-1}(2r/n), atomic units
double radial_s_wavefunction(int n, double r) {
  return 2.0 / std::pow(double(n), 2.5) * std::exp(-r / double(n)) *
         std::assoc_laguerre(unsigned(n - 1), 1, 2.0 * r / double(n));
}

void validate_hydrogen_args(int n, double l1, double l2, int orbital_l) {
  if (n < 1 || n > 10) throw ValidationError("principal quantum number must be 1..10");
  if (orbital_l != 0)
    throw ValidationError("only S levels carry a first-order shift (the "
                          "delta-function perturbation vanishes for l > 0)");
  if (l1 < 0 || l2 < 0) throw ValidationError("minimal widths must be nonnegative");
}

}  // namespace

HydrogenCorrection hydrogen_s_correction(int n, double l1, double l2, int orbital_l) {
  validate_hydrogen_args(n, l1, l2, orbital_l);
  const double L2 = l1 * l1 + l2 * l2;
  const double n3 = double(n) * double(n) * double(n);
  HydrogenCorrection c;
  c.n = n;
  c.de_paper = -8.0 * std::numbers::pi * L2 / n3;
  c.de_oracle = -2.0 * L2 / n3;
  c.ratio = L2 > 0 ? c.de_paper / c.de_oracle : 4.0 * std::numbers::pi;
  return c;
}

double hydrogen_s_correction_quadrature(int n, double l1, double l2, double a) {
  validate_hydrogen_args(n, l1, l2, 0);
  if (a <= 0) throw ValidationError("softening length must be positive");
  const double L2 = l1 * l1 + l2 * l2;

  // <nabla^2 V_a> with V_a = -1/sqrt(r^2+a^2) reduces to the radial integral
  // int R^2 3a^2 (r^2+a^2)^{-5/2} r^2 dr; substitute r = a sinh(s) so the
  // kernel becomes the bounded weight 3 sinh^2 s / cosh^4 s.
  const double r_max = 45.0 * double(n);
  const double s_max = std::asinh(r_max / a);
  const std::size_t segments = 4096;  // Simpson pairs
  const double hstep = s_max / double(2 * segments);
  auto integrand = [&](double s) {
    const double sh = std::sinh(s), ch = std::cosh(s);
    const double r = a * sh;
    const double w = 3.0 * sh * sh / (ch * ch * ch * ch);
    const double rad = radial_s_wavefunction(n, r);
    return rad * rad * w;
  };
  double sum = integrand(0.0) + integrand(s_max);
  for (std::size_t i = 1; i < 2 * segments; ++i)
    sum += integrand(double(i) * hstep) * (i % 2 == 1 ? 4.0 : 2.0);
  const double laplacian_mean = sum * hstep / 3.0;
  return -0.5 * L2 * laplacian_mean;
}

double hydrogen_s_correction_extrapolated(int n, double l1, double l2, double a_base) {
  const double e1 = hydrogen_s_correction_quadrature(n, l1, l2, a_base);
  const double e2 = hydrogen_s_correction_quadrature(n, l1, l2, a_base / 2.0);
  const double e3 = hydrogen_s_correction_quadrature(n, l1, l2, a_base / 4.0);
  const double r1 = 2.0 * e2 - e1;  // removes the O(a) term
  const double r2 = 2.0 * e3 - e2;
  return (4.0 * r2 - r1) / 3.0;  // removes O(a^2)
}

}  // namespace povmqm
