#pragma once

#include <complex>
#include <optional>

namespace qcp {

// Physical plasma parameters (Gaussian-CGS) together with the derived
// Fermi-surface scales. All fields are strictly positive.
struct FermiScales {
  double density;              // N, electrons per cm^3
  double charge;               // e, statC
  double mass;                 // m, g
  double hbar;                 // erg s
  double collision_rate;       // nu, 1/s
  double fermi_wavenumber;     // k_F = (3 pi^2 N)^{1/3}, 1/cm
  double fermi_velocity;       // v_F = hbar k_F / m, cm/s
  double fermi_energy;         // E_F = m v_F^2 / 2, erg
  double plasma_frequency;     // omega_p = sqrt(4 pi e^2 N / m), rad/s
  double static_conductivity;  // sigma_0 = e^2 N / (m nu), 1/s
};

// Dimensionless evaluation point. q = k/k_F, x = omega/(k_F v_F),
// y = nu/(k_F v_F); xp = omega_p/(k_F v_F) is needed only for the
// permittivity. z = x + iy is always derived, never stored.
struct DimensionlessQuery {
  double q = 0;
  double x = 0;
  double y = 0;
  std::optional<double> xp;

  std::complex<double> z() const { return {x, y}; }
};

FermiScales derive_fermi_scales(double density, double charge, double mass,
                                double hbar, double collision_rate);

// Maps a physical (omega, nu, k) triple onto the dimensionless query,
// including xp taken from the scales.
DimensionlessQuery to_dimensionless(double omega, double nu, double k,
                                    const FermiScales& scales);

// CODATA values in Gaussian-CGS, for the physical-units entry point.
inline constexpr double electron_charge_cgs = 4.80320425e-10;   // statC
inline constexpr double electron_mass_cgs = 9.1093837015e-28;   // g
inline constexpr double hbar_cgs = 1.054571817e-27;             // erg s

}  // namespace qcp
