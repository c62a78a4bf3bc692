#include "qcp/scales.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qcp {

namespace {

void require_positive(double value, const char* field) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw std::domain_error(std::string(field) + " must be > 0");
  }
}

}  // namespace

FermiScales derive_fermi_scales(double density, double charge, double mass,
                                double hbar, double collision_rate) {
  require_positive(density, "density");
  require_positive(charge, "charge");
  require_positive(mass, "mass");
  require_positive(hbar, "hbar");
  require_positive(collision_rate, "collision_rate");

  const double pi = std::numbers::pi;
  FermiScales s{};
  s.density = density;
  s.charge = charge;
  s.mass = mass;
  s.hbar = hbar;
  s.collision_rate = collision_rate;
  s.fermi_wavenumber = std::cbrt(3.0 * pi * pi * density);
  s.fermi_velocity = hbar * s.fermi_wavenumber / mass;
  s.fermi_energy = 0.5 * mass * s.fermi_velocity * s.fermi_velocity;
  s.plasma_frequency = std::sqrt(4.0 * pi * charge * charge * density / mass);
  s.static_conductivity = charge * charge * density / (mass * collision_rate);
  return s;
}

DimensionlessQuery to_dimensionless(double omega, double nu, double k,
                                    const FermiScales& scales) {
  require_positive(omega, "omega");
  require_positive(nu, "nu");
  require_positive(k, "k");

  const double kv = scales.fermi_wavenumber * scales.fermi_velocity;
  DimensionlessQuery query;
  query.q = k / scales.fermi_wavenumber;
  query.x = omega / kv;
  query.y = nu / kv;
  query.xp = scales.plasma_frequency / kv;
  return query;
}

}  // namespace qcp
