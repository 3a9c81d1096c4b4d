#include "povmqm/kernels.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <sstream>

#include "povmqm/fourier.hpp"

namespace povmqm {

namespace {

double two_pi_hbar_pow(double hbar, int d) {
  double b = 2.0 * std::numbers::pi * hbar;
  double r = 1.0;
  for (int i = 0; i < d; ++i) r *= b;
  return r;
}

// Leading terms of Omega_d(r) = 1 - r^2/(2d) + r^4/(8d(d+2)) - ...
double omega_series(int d, double r) {
  const double r2 = r * r;
  const double dd = double(d);
  return 1.0 - r2 / (2.0 * dd) + r2 * r2 / (8.0 * dd * (dd + 2.0)) -
         r2 * r2 * r2 / (48.0 * dd * (dd + 2.0) * (dd + 4.0));
}

}  // namespace

double omega_profile(int d, double r) {
  if (d < 1 || d > 3) throw ValidationError("omega profile: dimension must be 1, 2 or 3");
  if (r < 0) throw ValidationError("omega profile: radius must be nonnegative");
  if (r < 1e-4) return omega_series(d, r);
  switch (d) {
    case 1:
      return std::cos(r);
    case 2:
      return std::cyl_bessel_j(0.0, r);
    default:
      return std::sin(r) / r;
  }
}

RadialKernel RadialKernel::constant(int d, double hbar) {
  if (d < 1 || d > 3) throw ValidationError("kernel dimension must be 1, 2 or 3");
  if (hbar <= 0) throw ValidationError("hbar must be positive");
  return RadialKernel(d, hbar, KernelFamily::constant);
}

RadialKernel RadialKernel::gaussian(int d, double l0, double hbar) {
  if (d < 1 || d > 3) throw ValidationError("kernel dimension must be 1, 2 or 3");
  if (hbar <= 0) throw ValidationError("hbar must be positive");
  if (l0 < 0) throw ValidationError("gaussian kernel width must be nonnegative");
  RadialKernel k(d, hbar, KernelFamily::gaussian);
  k.l0_param_ = l0;
  return k;
}

RadialKernel RadialKernel::schoenberg(int d, std::vector<double> nodes,
                                      std::vector<double> relative_weights,
                                      double hbar) {
  if (d < 1 || d > 3) throw ValidationError("kernel dimension must be 1, 2 or 3");
  if (hbar <= 0) throw ValidationError("hbar must be positive");
  if (nodes.empty()) throw ValidationError("schoenberg measure needs at least one node");
  if (nodes.size() != relative_weights.size())
    throw ValidationError("schoenberg nodes/weights size mismatch");
  double wsum = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i] < 0) throw ValidationError("schoenberg nodes must be nonnegative");
    if (i > 0 && nodes[i] <= nodes[i - 1])
      throw ValidationError("schoenberg nodes must be strictly increasing");
    if (relative_weights[i] <= 0)
      throw ValidationError("schoenberg weights must be positive");
    wsum += relative_weights[i];
  }
  RadialKernel k(d, hbar, KernelFamily::schoenberg);
  k.measure_.nodes = std::move(nodes);
  k.measure_.weights = std::move(relative_weights);
  const double target = 1.0 / two_pi_hbar_pow(hbar, d);
  for (double& w : k.measure_.weights) w *= target / wsum;
  return k;
}

double RadialKernel::operator()(double r) const {
  switch (family_) {
    case KernelFamily::constant:
      return xi0();
    case KernelFamily::gaussian: {
      const double a = l0_param_ * r / hbar_;
      return xi0() * std::exp(-0.5 * a * a);
    }
    case KernelFamily::schoenberg: {
      double s = 0.0;
      for (std::size_t i = 0; i < measure_.nodes.size(); ++i)
        s += measure_.weights[i] * omega_profile(d_, r * measure_.nodes[i]);
      return s;
    }
  }
  return 0.0;
}

double RadialKernel::xi0() const { return 1.0 / two_pi_hbar_pow(hbar_, d_); }

double RadialKernel::xi2() const {
  switch (family_) {
    case KernelFamily::constant:
      return 0.0;
    case KernelFamily::gaussian:
      return -xi0() * l0_param_ * l0_param_ / (hbar_ * hbar_);
    case KernelFamily::schoenberg: {
      double s = 0.0;
      for (std::size_t i = 0; i < measure_.nodes.size(); ++i)
        s += measure_.weights[i] * measure_.nodes[i] * measure_.nodes[i];
      return -s / double(d_);  // Omega_d''(0) = -1/d
    }
  }
  return 0.0;
}

double RadialKernel::xi4() const {
  switch (family_) {
    case KernelFamily::constant:
      return 0.0;
    case KernelFamily::gaussian: {
      const double a = l0_param_ / hbar_;
      return 3.0 * xi0() * a * a * a * a;
    }
    case KernelFamily::schoenberg: {
      double s = 0.0;
      for (std::size_t i = 0; i < measure_.nodes.size(); ++i) {
        const double u2 = measure_.nodes[i] * measure_.nodes[i];
        s += measure_.weights[i] * u2 * u2;
      }
      return 3.0 * s / (double(d_) * (double(d_) + 2.0));
    }
  }
  return 0.0;
}

double RadialKernel::l0() const {
  switch (family_) {
    case KernelFamily::constant:
      return 0.0;
    case KernelFamily::gaussian:
      return l0_param_;
    case KernelFamily::schoenberg: {
      double num = 0.0, den = 0.0;
      for (std::size_t i = 0; i < measure_.nodes.size(); ++i) {
        num += measure_.weights[i] * measure_.nodes[i] * measure_.nodes[i];
        den += measure_.weights[i];
      }
      return hbar_ * std::sqrt(num / (double(d_) * den));
    }
  }
  return 0.0;
}

double RadialKernel::profile_moment4() const {
  const double h2 = hbar_ * hbar_;
  return h2 * h2 * xi4() * two_pi_hbar_pow(hbar_, d_);
}

std::string RadialKernel::describe() const {
  std::ostringstream os;
  switch (family_) {
    case KernelFamily::constant:
      os << "constant(d=" << d_ << ")";
      break;
    case KernelFamily::gaussian:
      os << "gaussian(d=" << d_ << ", l0=" << l0_param_ << ")";
      break;
    case KernelFamily::schoenberg:
      os << "schoenberg(d=" << d_ << ", nodes=" << measure_.nodes.size()
         << ", l0=" << l0() << ")";
      break;
  }
  return os.str();
}

GramCheckResult gram_psd_check_fn(const std::function<double(double)>& f, int d,
                                  std::span<const double> points, double tol) {
  if (d < 1) throw ValidationError("gram check: bad dimension");
  if (points.size() % std::size_t(d) != 0)
    throw ValidationError("gram check: packed point array not a multiple of d");
  const std::size_t npts = points.size() / std::size_t(d);
  if (npts < 2) throw ValidationError("gram check needs at least two points");

  GramCheckResult res;
  bool any_distinct = false;
  Eigen::MatrixXd g(npts, npts);
  for (std::size_t i = 0; i < npts; ++i) {
    for (std::size_t j = i; j < npts; ++j) {
      double r2 = 0.0;
      for (int a = 0; a < d; ++a) {
        const double dq = points[i * d + a] - points[j * d + a];
        r2 += dq * dq;
      }
      if (i != j && r2 > 0) any_distinct = true;
      const double v = f(std::sqrt(r2));
      g(Eigen::Index(i), Eigen::Index(j)) = v;
      g(Eigen::Index(j), Eigen::Index(i)) = v;
    }
  }
  res.degenerate_points = !any_distinct;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(g, Eigen::EigenvaluesOnly);
  res.min_eigenvalue = solver.eigenvalues().minCoeff();
  res.max_eigenvalue = solver.eigenvalues().maxCoeff();
  res.psd = res.min_eigenvalue >= -tol * std::abs(res.max_eigenvalue);
  return res;
}

GramCheckResult gram_psd_check(const RadialKernel& k, std::span<const double> points,
                               double tol) {
  return gram_psd_check_fn([&k](double r) { return k(r); }, k.dim(), points, tol);
}

void require_profile_resolved(const RadialKernel& k, const MomentumGrid& grid) {
  if (k.dim() != grid.dim())
    throw ValidationError("kernel/grid dimension mismatch");
  if (k.hbar() != grid.hbar())
    throw ValidationError("kernel/grid hbar mismatch");
  const double l0 = k.l0();
  if (l0 > 0 && l0 < 4.0 * grid.dx()) {
    std::ostringstream os;
    os << "kernel width l0=" << l0 << " unresolved by position grid dx=" << grid.dx()
       << " (need dx <= l0/4)";
    throw ResolutionError(os.str());
  }
}

std::vector<double> smoothing_profile(const RadialKernel& k, const MomentumGrid& grid) {
  require_profile_resolved(k, grid);
  FourierEngine engine(grid);
  const std::size_t total = grid.size();
  std::vector<cplx> coeff(total);
  for (std::size_t m = 0; m < total; ++m) {
    double q2 = 0.0;
    for (int a = 0; a < grid.dim(); ++a) {
      const double q = grid.momentum(grid.axis_index(m, a));
      q2 += q * q;
    }
    coeff[m] = k(std::sqrt(q2));
  }
  return engine.inverse_q_real(coeff);
}

}  // namespace povmqm
