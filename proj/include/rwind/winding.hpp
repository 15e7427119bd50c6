#pragma once

// Winding index of the lifted modular discriminant along closed geodesics,
// and the period of the weight-2 Eisenstein series E2 over the same orbit.

#include <complex>
#include <cstdint>
#include <vector>

#include "rwind/mat2.hpp"

namespace rwind {

enum class QSeriesKind { Delta, E2Holomorphic };

// Truncated q-expansion with exact integer coefficients c_0 .. c_N.
struct QSeries {
  QSeriesKind kind;
  std::vector<std::int64_t> coefficients;
};

inline constexpr int kQSeriesOrder = 40;

// Shared immutable tables, built on first use.
const QSeries& delta_series();
const QSeries& e2_series();

struct Reduction {
  std::complex<double> z_reduced;
  // Delta(z) = exp(log_scale + i arg_offset) * Delta(z_reduced).
  double arg_offset = 0.0;
  double log_scale = 0.0;
  // j(M, z) for the reducing matrix M with M z = z_reduced.
  std::complex<double> j{1.0, 0.0};
};

// Moves z into |x| <= 1/2, |z| >= 1. Throws NonPositiveImaginary.
Reduction reduce_to_fundamental(std::complex<double> z);

struct LogDeltaValue {
  double log_modulus = 0.0;
  double arg_mod_2pi = 0.0;  // in (-pi, pi]
};

LogDeltaValue delta_eval(std::complex<double> z);

// Nonholomorphic weight-2 Eisenstein series E2(z) = E2hol(z) - 3/(pi y).
std::complex<double> e2_eval(std::complex<double> z);

struct AxisPoint {
  std::complex<double> z;
  std::complex<double> dz_dt;
};

// Unit-speed parametrization of the axis of gamma (trace > 2; negative trace
// is replaced by -gamma), z(0) = g i at the top of the semicircle and
// z(t + l) = gamma z(t). Throws NotHyperbolic.
AxisPoint axis_point(const Mat2& gamma, double t);

struct WindingOptions {
  double max_step = 0.05;
  // Step bound 0.3 / max(1, y) in the cusp, y the reduced height.
  double cusp_step = 0.3;
};

struct WindingResult {
  std::int64_t index = 0;
  // Total argument variation divided by 2 pi, before rounding.
  double turns = 0.0;
  double residual = 0.0;
  std::size_t steps = 0;
};

// Tracks arg(Delta(z(t)) (dz/dt)^6) continuously over one period.
// Throws StepTooCoarse or ResidualTooLarge.
WindingResult winding_trace(const Mat2& gamma, const WindingOptions& options = {});
inline std::int64_t winding_index(const Mat2& gamma) { return winding_trace(gamma).index; }

// Integral of E2(z) dz over one period of the axis. Throws QuadratureFailure.
std::complex<double> e2_period_complex(const Mat2& gamma, const WindingOptions& options = {});
// Real part; the contract requires |imaginary part| < 1e-6.
double e2_period(const Mat2& gamma);

}  // namespace rwind
