#pragma once

// Adaptive Gauss-Kronrod (7/15) quadrature for real- or complex-valued
// integrands on a finite interval.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <type_traits>

#include "rwind/error.hpp"

namespace rwind {

template <typename V>
struct QuadResult {
  V value{};
  double error = 0.0;
  std::size_t evaluations = 0;
};

namespace detail {

inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851, 0.864864423359769072789712788640926,
    0.741531185599394439863864773280788, 0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204, 0.104790010322250183839876322541518,
    0.140653259715525918745189590510238, 0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd-indexed Kronrod nodes (1, 3, 5) and the centre.
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780, 0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

inline double magnitude(double v) { return std::fabs(v); }
template <typename T>
double magnitude(const std::complex<T>& v) { return static_cast<double>(std::abs(v)); }

template <typename F>
auto gk15(F&& f, double a, double b) {
  using V = std::invoke_result_t<F&, double>;
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  V centre = f(mid);
  V kronrod = centre * kKronrodWeights[7];
  V gauss = centre * kGaussWeights[3];
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    V pair = f(mid - dx) + f(mid + dx);
    kronrod += pair * kKronrodWeights[i];
    if (i % 2 == 1) gauss += pair * kGaussWeights[i / 2];
  }
  return QuadResult<V>{kronrod * half, magnitude((kronrod - gauss) * half), 15};
}

template <typename F>
auto adaptive(F& f, double a, double b, double abs_tol, double rel_tol, int depth) {
  auto whole = gk15(f, a, b);
  if (!std::isfinite(whole.error)) throw Error(ErrorKind::QuadratureFailure, "non-finite integrand");
  if (whole.error <= std::max(abs_tol, rel_tol * magnitude(whole.value))) return whole;
  if (depth == 0) throw Error(ErrorKind::QuadratureFailure, "subdivision limit reached");
  const double mid = 0.5 * (a + b);
  auto left = adaptive(f, a, mid, 0.5 * abs_tol, rel_tol, depth - 1);
  auto right = adaptive(f, mid, b, 0.5 * abs_tol, rel_tol, depth - 1);
  return decltype(whole){left.value + right.value, left.error + right.error,
                         whole.evaluations + left.evaluations + right.evaluations};
}

}  // namespace detail

// Recursive bisection until each panel meets max(abs_tol, rel_tol*|panel|).
// Throws QuadratureFailure when max_depth bisections do not suffice.
template <typename F>
auto integrate(F&& f, double a, double b, double abs_tol, double rel_tol, int max_depth = 40) {
  return detail::adaptive(f, a, b, abs_tol, rel_tol, max_depth);
}

}  // namespace rwind
