#pragma once

#include <map>
#include <string>

namespace povmqm {

/// SI values (CODATA 2018) with citation strings for report output.
/// The Bohr radius uses the electron-proton reduced mass, matching the
/// hydrogen pipeline convention.
struct PhysicalConstants {
  double hbar;            // J s
  double c;               // m/s
  double G;               // m^3 kg^-1 s^-2
  double e;               // C
  double eps0;            // F/m
  double electron_mass;   // kg
  double proton_mass;     // kg
  double planck_length;   // m
  double planck_mass;     // kg
  double bohr_radius;     // m (reduced-mass convention)

  static PhysicalConstants codata2018();
  static const std::map<std::string, std::string>& citations();

  double reduced_mass_ep() const {
    return electron_mass * proton_mass / (electron_mass + proton_mass);
  }
  /// Hartree energy with the reduced-mass Bohr radius, J.
  double hartree() const;
};

struct AurigaRecord {
  double mass;      // kg, mode mass
  double omega;     // rad/s, mode angular frequency
  double e_exp;     // J, observed upper bound on the mode energy
  int d = 1;        // oscillator dimensionality in the ground-state formula
};

struct Hydrogen1s2sRecord {
  double relative_uncertainty;  // of the 1S-2S transition frequency
};

enum class HydrogenConvention { paper_formula, delta_oracle };

struct BoundResult {
  double l0_max_m = 0;       // meters
  double l0_max_planck = 0;  // Planck lengths
  std::string formula;
  std::map<std::string, double> inputs;  // echoed
};

/// Ground-state energy floor (d/2) hbar w + (d/2) m l0^2 w^2 < E_exp
/// inverted for l0.
BoundResult auriga_bound(const AurigaRecord& rec, const PhysicalConstants& c);

/// |dE_2 - dE_1| <= eps * E(1S-2S) solved for sqrt(l1^2 + l2^2), with the
/// S-level shift convention recorded in the result.
BoundResult hydrogen_1s2s_bound(const Hydrogen1s2sRecord& rec,
                                HydrogenConvention convention,
                                const PhysicalConstants& c);

}  // namespace povmqm
