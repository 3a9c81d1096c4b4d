#include "povmqm/potential.hpp"

#include <cmath>
#include <sstream>

#include "povmqm/fourier.hpp"

namespace povmqm {

PotentialSpec PotentialSpec::harmonic(double mass, double omega) {
  if (mass <= 0 || omega <= 0)
    throw ValidationError("harmonic potential needs positive mass and omega");
  PotentialSpec p(PotentialFamily::harmonic);
  p.mass_ = mass;
  p.omega_ = omega;
  return p;
}

PotentialSpec PotentialSpec::gaussian_well(double depth, double width) {
  if (depth >= 0) throw ValidationError("gaussian well depth must be negative");
  if (width <= 0) throw ValidationError("gaussian well width must be positive");
  PotentialSpec p(PotentialFamily::gaussian_well);
  p.depth_ = depth;
  p.width_ = width;
  return p;
}

PotentialSpec PotentialSpec::tabulated(std::vector<double> samples) {
  if (samples.empty()) throw ValidationError("tabulated potential needs samples");
  for (double v : samples)
    if (!std::isfinite(v)) throw ValidationError("tabulated potential has non-finite entry");
  PotentialSpec p(PotentialFamily::tabulated);
  p.table_ = std::move(samples);
  return p;
}

std::vector<double> PotentialSpec::samples(const MomentumGrid& grid) const {
  const std::size_t total = grid.size();
  std::vector<double> v(total);
  switch (family_) {
    case PotentialFamily::harmonic: {
      const double c = 0.5 * mass_ * omega_ * omega_;
      for (std::size_t m = 0; m < total; ++m) {
        double r2 = 0;
        for (int a = 0; a < grid.dim(); ++a) {
          const double x = grid.position(grid.axis_index(m, a));
          r2 += x * x;
        }
        v[m] = c * r2;
      }
      break;
    }
    case PotentialFamily::gaussian_well: {
      const double inv2w2 = 1.0 / (2.0 * width_ * width_);
      for (std::size_t m = 0; m < total; ++m) {
        double r2 = 0;
        for (int a = 0; a < grid.dim(); ++a) {
          const double x = grid.position(grid.axis_index(m, a));
          r2 += x * x;
        }
        v[m] = depth_ * std::exp(-r2 * inv2w2);
      }
      break;
    }
    case PotentialFamily::tabulated:
      if (table_.size() != total)
        throw ValidationError("tabulated potential does not match grid size");
      v = table_;
      break;
  }
  return v;
}

std::vector<double> PotentialSpec::gradient_samples(const MomentumGrid& grid,
                                                    int axis) const {
  if (axis < 0 || axis >= grid.dim())
    throw ValidationError("gradient axis out of range");
  const std::size_t total = grid.size();
  std::vector<double> g(total);
  switch (family_) {
    case PotentialFamily::harmonic: {
      const double c = mass_ * omega_ * omega_;
      for (std::size_t m = 0; m < total; ++m)
        g[m] = c * grid.position(grid.axis_index(m, axis));
      break;
    }
    case PotentialFamily::gaussian_well: {
      const double inv2w2 = 1.0 / (2.0 * width_ * width_);
      for (std::size_t m = 0; m < total; ++m) {
        double r2 = 0;
        for (int a = 0; a < grid.dim(); ++a) {
          const double x = grid.position(grid.axis_index(m, a));
          r2 += x * x;
        }
        const double x = grid.position(grid.axis_index(m, axis));
        g[m] = depth_ * std::exp(-r2 * inv2w2) * (-x / (width_ * width_));
      }
      break;
    }
    case PotentialFamily::tabulated: {
      // spectral derivative of the periodic samples
      FourierEngine engine(grid);
      auto coeff = engine.forward_q_real(samples(grid));
      for (std::size_t j = 0; j < total; ++j) {
        const double q = grid.momentum(grid.axis_index(j, axis));
        coeff[j] *= cplx(0.0, q / grid.hbar());
      }
      g = engine.inverse_q_real(coeff);
      break;
    }
  }
  return g;
}

std::string PotentialSpec::describe() const {
  std::ostringstream os;
  switch (family_) {
    case PotentialFamily::harmonic:
      os << "harmonic(m=" << mass_ << ", omega=" << omega_ << ")";
      break;
    case PotentialFamily::gaussian_well:
      os << "gaussian_well(depth=" << depth_ << ", width=" << width_ << ")";
      break;
    case PotentialFamily::tabulated:
      os << "tabulated(" << table_.size() << " samples)";
      break;
  }
  return os.str();
}

}  // namespace povmqm
