#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace qcp {

// Thrown when the adaptive rule exhausts its segment budget before meeting
// the requested tolerance; carries the error estimate actually reached.
class quadrature_error : public std::runtime_error {
 public:
  quadrature_error(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_(achieved) {}
  double achieved_error() const noexcept { return achieved_; }

 private:
  double achieved_;
};

struct QuadratureOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-300;  // relative control by default
  std::size_t max_segments = 4000;
};

namespace quad_detail {

// 15-point Kronrod nodes with the embedded 7-point Gauss rule (QUADPACK dqk15).
inline constexpr double kron_nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
};
inline constexpr double kron_weights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
inline constexpr double gauss_weights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

template <typename F>
using result_t = std::remove_cvref_t<std::invoke_result_t<F&, double>>;

template <typename F>
struct GkEstimate {
  result_t<F> value;
  double error;
};

template <typename F>
GkEstimate<F> gk15(F& f, double a, double b) {
  using R = result_t<F>;
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);

  R gauss = R{};
  const R f_mid = f(mid);
  R kron = kron_weights[7] * f_mid;
  gauss = gauss_weights[3] * f_mid;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kron_nodes[i];
    const R sum = f(mid - dx) + f(mid + dx);
    kron += kron_weights[i] * sum;
    if (i % 2 == 1) gauss += gauss_weights[i / 2] * sum;
  }
  kron *= half;
  gauss *= half;
  return {kron, std::abs(kron - gauss)};
}

}  // namespace quad_detail

// Globally adaptive Gauss-Kronrod integration over the segments delimited by
// `points` (ascending). Works for real- and complex-valued integrands.
template <typename F>
quad_detail::result_t<F> integrate_segments(F&& f, std::span<const double> points,
                                            const QuadratureOptions& opt = {}) {
  using R = quad_detail::result_t<F>;
  struct Segment {
    double a, b;
    R value;
    double error;
  };

  std::vector<Segment> segments;
  segments.reserve(64);
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    auto est = quad_detail::gk15(f, points[i], points[i + 1]);
    segments.push_back({points[i], points[i + 1], est.value, est.error});
  }

  auto totals = [&segments]() {
    R value = R{};
    double error = 0;
    for (const auto& s : segments) {
      value += s.value;
      error += s.error;
    }
    return std::pair<R, double>(value, error);
  };

  while (true) {
    auto [value, error] = totals();
    const double target =
        std::max(opt.abs_tol, opt.rel_tol * std::abs(value));
    if (error <= 0.5 * target) return value;
    if (segments.size() >= opt.max_segments) {
      throw quadrature_error("adaptive quadrature did not converge", error);
    }
    std::size_t worst = 0;
    for (std::size_t i = 1; i < segments.size(); ++i) {
      if (segments[i].error > segments[worst].error) worst = i;
    }
    const Segment seg = segments[worst];
    const double mid = 0.5 * (seg.a + seg.b);
    if (!(seg.a < mid && mid < seg.b)) {
      // interval no longer representable; accept what we have
      return value;
    }
    auto left = quad_detail::gk15(f, seg.a, mid);
    auto right = quad_detail::gk15(f, mid, seg.b);
    segments[worst] = {seg.a, mid, left.value, left.error};
    segments.push_back({mid, seg.b, right.value, right.error});
  }
}

template <typename F>
quad_detail::result_t<F> integrate(F&& f, double a, double b,
                                   const QuadratureOptions& opt = {}) {
  const double pts[2] = {a, b};
  return integrate_segments(f, pts, opt);
}

}  // namespace qcp
