#pragma once

#include <string>
#include <vector>

#include "povmqm/grid.hpp"

namespace povmqm {

enum class PotentialFamily { harmonic, gaussian_well, tabulated };

/// Real scalar potential V(x).  Harmonic and GaussianWell sample their
/// closed forms on any grid; Tabulated carries samples for one specific
/// grid shape.
class PotentialSpec {
 public:
  static PotentialSpec harmonic(double mass, double omega);
  static PotentialSpec gaussian_well(double depth, double width);
  /// Samples on the full position grid, row-major.
  static PotentialSpec tabulated(std::vector<double> samples);

  PotentialFamily family() const { return family_; }
  double mass() const { return mass_; }
  double omega() const { return omega_; }
  double depth() const { return depth_; }
  double width() const { return width_; }

  /// V(x_m) over the dual position grid.
  std::vector<double> samples(const MomentumGrid& grid) const;

  /// dV/dx_axis sampled on the grid: analytic for the closed-form families,
  /// spectral derivative for tabulated data.
  std::vector<double> gradient_samples(const MomentumGrid& grid, int axis) const;

  std::string describe() const;

 private:
  explicit PotentialSpec(PotentialFamily f) : family_(f) {}

  PotentialFamily family_;
  double mass_ = 0, omega_ = 0;   // harmonic
  double depth_ = 0, width_ = 0;  // gaussian well
  std::vector<double> table_;     // tabulated
};

}  // namespace povmqm
