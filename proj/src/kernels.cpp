#include "qcp/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "qcp/quadrature.hpp"

namespace qcp {

namespace {

using cplx = std::complex<double>;

void require_domain(double q, cplx z) {
  if (!(q > 0.0)) throw std::domain_error("q must be > 0");
  if (!(z.imag() > 0.0)) throw std::domain_error("Im z must be > 0");
}

// log((c-1)/(c+1)); for Im c > 0 the ratio stays in the upper half plane, so
// the principal branch is never crossed.
cplx log_ratio(cplx c) { return std::log((c - 1.0) / (c + 1.0)); }

// T1 as an exact series in inverse powers of (w^2 - a^2), obtained from the
// |c| > 1 expansion of (c^2-1)^2 log((c-1)/(c+1)) at c = w +- a with the
// difference of the two branches recombined binomially. Converges for
// min(|w - a|, |w + a|) > 1; used from 3 outward, where the direct log form
// loses digits to cancellation.
cplx t1_series(cplx w, double a) {
  const cplx denom = w * w - a * a;
  const cplx inv2 = 1.0 / (denom * denom);
  cplx denom_pow = 1.0 / denom;  // (w^2-a^2)^{-(2k-1)}
  const double a2 = a * a;
  const cplx w2 = w * w;

  cplx sum = 0.0;
  std::vector<cplx> w2_powers{1.0};
  for (int k = 1; k <= 60; ++k) {
    const int n = 2 * k - 1;
    const double beta =
        8.0 / (double(2 * k - 1) * double(2 * k + 1) * double(2 * k + 3));
    w2_powers.push_back(w2_powers.back() * w2);
    // inner = sum_j C(n, 2j+1) w^{2(k-1-j)} a^{2j}
    cplx inner = 0.0;
    double binom = n;  // C(n, 1)
    double a2pow = 1.0;
    for (int j = 0; j < k; ++j) {
      inner += binom * w2_powers[k - 1 - j] * a2pow;
      // C(n, 2j+3) = C(n, 2j+1) (n-2j-1)(n-2j-2) / ((2j+2)(2j+3))
      binom *= double(n - 2 * j - 1) * double(n - 2 * j - 2) /
               (double(2 * j + 2) * double(2 * j + 3));
      a2pow *= a2;
    }
    const cplx term = 2.0 * beta * inner * denom_pow;
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
    denom_pow *= inv2;
  }
  return sum;
}

cplx t1_log_form(cplx w, double a) {
  const cplx cp = w + a;
  const cplx cm = w - a;
  const cplx A = cp * cp - 1.0;
  const cplx B = cm * cm - 1.0;
  return 6.0 * w * w + 2.0 * a * a - 10.0 / 3.0 +
         (A * A * log_ratio(cp) - B * B * log_ratio(cm)) / (2.0 * a);
}

}  // namespace

double t0_closed(double q) {
  if (!(q > 0.0)) throw std::domain_error("q must be > 0");
  if (q < t0_series_threshold) {
    const double q2 = q * q;
    return -8.0 / 3.0 + (2.0 / 3.0) * q2 - q2 * q2 / 30.0 - q2 * q2 * q2 / 840.0;
  }
  if (q == 2.0) return -2.0 / 3.0;
  const double q2 = q * q;
  const double coeff = (q2 - 4.0) * (q2 - 4.0) / (16.0 * q);
  return -5.0 / 3.0 + 0.25 * q2 + coeff * std::log(std::abs((2.0 - q) / (2.0 + q)));
}

double t0_quadrature(double q, double rel_tol) {
  if (!(q > 0.0)) throw std::domain_error("q must be > 0");
  if (std::abs(q - 2.0) <= 1e-6) {
    throw std::domain_error("t0_quadrature: pole at the endpoint t = 1 for q near 2");
  }
  QuadratureOptions opt;
  opt.rel_tol = rel_tol;

  const double c = 0.5 * q;
  const double c2 = c * c;
  auto f = [c2](double t) { return (1.0 - t * t) * (1.0 - t * t) / (t * t - c2); };

  if (c >= 1.0) {
    return integrate(f, 0.0, 1.0, opt);
  }

  // Pole inside (0, 1): excise [c-d, c+d] and integrate the symmetric
  // combination f(c+u) + f(c-u), which is the rational function below (the
  // 1/u poles cancel pairwise).
  const double d = 0.5 * std::min(c, 1.0 - c);
  const double A = 1.0 - c2;
  auto paired = [c2, A](double u) {
    const double u2 = u * u;
    return -2.0 * (A * A + 8.0 * c2 * A - (4.0 * c2 + 2.0 * A) * u2 + u2 * u2) /
           (4.0 * c2 - u2);
  };

  double value = integrate(paired, 0.0, d, opt);
  if (c - d > 0.0) value += integrate(f, 0.0, c - d, opt);
  value += integrate(f, c + d, 1.0, opt);
  return value;
}

std::complex<double> t1_closed_form(double q, std::complex<double> z) {
  require_domain(q, z);
  const cplx w = z / q;
  const double a = 0.5 * q;
  const double sep = std::min(std::abs(w - a), std::abs(w + a));
  if (sep >= 3.0) return t1_series(w, a);
  return t1_log_form(w, a);
}

std::complex<double> t1_quadrature(double q, std::complex<double> z,
                                   double rel_tol) {
  require_domain(q, z);
  const cplx w = z / q;
  const double a = 0.5 * q;

  std::vector<double> points{-1.0};
  for (double pole_re : {w.real() - a, w.real() + a}) {
    if (pole_re > -1.0 && pole_re < 1.0) points.push_back(pole_re);
  }
  points.push_back(1.0);
  std::sort(points.begin(), points.end());

  QuadratureOptions opt;
  opt.rel_tol = rel_tol;
  opt.max_segments = 20000;
  auto f = [w, a](double t) {
    const cplx d = t - w;
    return (1.0 - t * t) * (1.0 - t * t) / (d * d - a * a);
  };
  return integrate_segments(f, points, opt);
}

std::complex<double> t1_closed(double q, std::complex<double> z,
                               bool* used_quadrature) {
  const cplx closed = t1_closed_form(q, z);
  const cplx check = t1_quadrature(q, z, 1e-8);
  if (used_quadrature) *used_quadrature = false;
  if (std::abs(closed - check) > 1e-6 * std::abs(check)) {
    if (used_quadrature) *used_quadrature = true;
    return t1_quadrature(q, z, 1e-10);
  }
  return closed;
}

KernelPair kernel_pair(double q, std::complex<double> z) {
  KernelPair pair{};
  pair.t0 = t0_closed(q);
  pair.t1 = t1_closed(q, z, &pair.t1_from_quadrature);
  return pair;
}

}  // namespace qcp
