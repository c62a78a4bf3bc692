#pragma once

#include <complex>

namespace qcp {

// Kernel values at one evaluation point. t0 is the principal-value integral
// int_0^1 (1-t^2)^2 dt/(t^2-q^2/4); t1 is int_{-1}^{1} (1-t^2)^2 dt over
// ((t-z/q)^2-q^2/4) for Im z > 0. t1_from_quadrature marks points where the
// closed form disagreed with the quadrature cross-check and the quadrature
// value was returned instead.
struct KernelPair {
  double t0;
  std::complex<double> t1;
  bool t1_from_quadrature;
};

// Small-q switch for t0_closed: below this the log term is evaluated by its
// power series to avoid the (1/q) * log cancellation.
inline constexpr double t0_series_threshold = 1e-3;

// Closed form of T0 (exact value at q = 2 is -2/3, where the log coefficient
// vanishes). Throws std::domain_error for q <= 0.
double t0_closed(double q);

// Principal-value oracle: symmetric excision around the pole t = q/2 plus
// adaptive quadrature on the regular remainder. Rejects |q - 2| <= 1e-6
// (pole at the integration endpoint).
double t0_quadrature(double q, double rel_tol = 1e-12);

// Closed form of T1, assembled with principal-branch logarithms per factor;
// switches to an exact large-argument series where the log form cancels
// catastrophically. Throws std::domain_error for q <= 0 or Im z <= 0.
std::complex<double> t1_closed_form(double q, std::complex<double> z);

// Adaptive complex quadrature oracle for T1.
std::complex<double> t1_quadrature(double q, std::complex<double> z,
                                   double rel_tol = 1e-10);

// Guarded kernel evaluation: returns the closed form after a quadrature
// cross-check, falling back to the quadrature value (and setting the flag)
// when the two disagree by more than 1e-6 relative.
std::complex<double> t1_closed(double q, std::complex<double> z,
                               bool* used_quadrature = nullptr);

KernelPair kernel_pair(double q, std::complex<double> z);

}  // namespace qcp
