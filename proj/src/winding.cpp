#include "rwind/winding.hpp"

#include <cmath>
#include <numbers>

#include "rwind/arith.hpp"
#include "rwind/quadrature.hpp"

namespace rwind {

namespace {

using cld = std::complex<long double>;
constexpr long double kPi = std::numbers::pi_v<long double>;

long double wrap_angle(long double a) {
  a = std::remainder(a, 2.0L * kPi);
  if (a <= -kPi) a += 2.0L * kPi;
  return a;
}

QSeries build_delta() {
  // q prod (1 - q^n)^24, coefficients c_1 .. c_N (tau function); c_0 = 0.
  std::vector<std::int64_t> prod(kQSeriesOrder, 0);
  prod[0] = 1;
  for (int n = 1; n < kQSeriesOrder; ++n)
    for (int rep = 0; rep < 24; ++rep)
      for (int m = kQSeriesOrder - 1; m >= n; --m) prod[m] -= prod[m - n];
  std::vector<std::int64_t> coeffs(kQSeriesOrder + 1, 0);
  for (int m = 0; m < kQSeriesOrder; ++m) coeffs[m + 1] = prod[m];
  return {QSeriesKind::Delta, std::move(coeffs)};
}

QSeries build_e2() {
  std::vector<std::int64_t> coeffs(kQSeriesOrder + 1, 0);
  coeffs[0] = 1;
  for (int n = 1; n <= kQSeriesOrder; ++n) {
    std::int64_t sigma = 0;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) sigma += d;
    coeffs[n] = -24 * sigma;
  }
  return {QSeriesKind::E2Holomorphic, std::move(coeffs)};
}

// Horner evaluation of sum_{n >= from} c_n q^(n - from).
cld horner(const std::vector<std::int64_t>& c, cld q, std::size_t from) {
  cld acc = 0;
  for (std::size_t n = c.size(); n-- > from;) acc = acc * q + static_cast<long double>(c[n]);
  return acc;
}

struct ReductionLd {
  cld w;
  cld j{1.0L, 0.0L};
  long double arg_sum = 0.0L;  // sum of principal arg j over S-moves
  long double log_abs_sum = 0.0L;
};

ReductionLd reduce_ld(cld z) {
  if (!(z.imag() > 0.0L)) throw Error(ErrorKind::NonPositiveImaginary, "point not in the upper half-plane");
  ReductionLd r{z};
  for (int guard = 0; guard < 100000; ++guard) {
    r.w -= std::nearbyint(r.w.real());
    if (std::norm(r.w) >= 1.0L - 1e-15L) return r;
    // S-move w -> -1/w with j(S, w) = w.
    r.j *= r.w;
    r.arg_sum += principal_arg(r.w.real(), r.w.imag());
    r.log_abs_sum += std::log(std::abs(r.w));
    r.w = -1.0L / r.w;
  }
  throw Error(ErrorKind::NonPositiveImaginary, "reduction did not terminate");
}

// q = exp(2 pi i w)
cld nome(cld w) { return std::exp(cld(0.0L, 2.0L * kPi) * w); }

// log Delta at a reduced point. With y >= sqrt(3)/2, |q| <= exp(-pi sqrt 3)
// < 4.4e-3; |tau(n)| <= d(n) n^(11/2) so the tail past n = 40 is far below
// 1e-14 relative to the leading term.
cld log_delta_reduced(cld w) {
  const cld q = nome(w);
  return cld(0.0L, 2.0L * kPi) * w + std::log(horner(delta_series().coefficients, q, 1));
}

cld e2_star_reduced(cld w) {
  const cld q = nome(w);
  return horner(e2_series().coefficients, q, 0) - 3.0L / (kPi * w.imag());
}

struct Axis {
  long double centre;
  long double radius;
  long double orient;  // sign(c)
  long double length;
};

Axis make_axis(const Mat2& input) {
  const i128 t0 = input.trace();
  if (abs128(t0) <= 2) throw Error(ErrorKind::NotHyperbolic, "trace " + to_string(t0) + " of " + input.str());
  const Mat2 gamma = t0 < 0 ? -input : input;
  const auto c = static_cast<long double>(gamma.c());
  const auto t = static_cast<long double>(gamma.trace());
  const auto diff = static_cast<long double>(gamma.a() - gamma.d());
  const long double root = std::sqrt(t * t - 4.0L);
  return {diff / (2.0L * c), root / (2.0L * std::fabs(c)), c > 0 ? 1.0L : -1.0L, 2.0L * std::acosh(t / 2.0L)};
}

// z = centre + s R (w - 1)/(w + 1) with w = s i e^t, i.e. g(w) for
// g = (alpha alpha_bar; 1 1), taken with the orientation that keeps Im z > 0.
void axis_eval(const Axis& ax, long double t, cld& z, cld& dz) {
  const cld w(0.0L, ax.orient * std::exp(t));
  const cld denom = w + 1.0L;
  z = ax.centre + ax.orient * ax.radius * (w - 1.0L) / denom;
  dz = ax.orient * ax.radius * 2.0L * w / (denom * denom);
}

long double step_bound(const WindingOptions& opt, long double reduced_y) {
  return std::min<long double>(opt.max_step, opt.cusp_step / std::max(1.0L, reduced_y));
}

// arg(Delta(z) dz^6) mod 2 pi, plus the reduced height for step control.
long double lifted_phase(cld z, cld dz, long double& reduced_y) {
  const ReductionLd r = reduce_ld(z);
  reduced_y = r.w.imag();
  const long double arg_delta = log_delta_reduced(r.w).imag() - 12.0L * r.arg_sum;
  return wrap_angle(arg_delta + 6.0L * std::arg(dz));
}

}  // namespace

const QSeries& delta_series() {
  static const QSeries series = build_delta();
  return series;
}

const QSeries& e2_series() {
  static const QSeries series = build_e2();
  return series;
}

Reduction reduce_to_fundamental(std::complex<double> z) {
  const ReductionLd r = reduce_ld(cld(z.real(), z.imag()));
  return {std::complex<double>(static_cast<double>(r.w.real()), static_cast<double>(r.w.imag())),
          static_cast<double>(wrap_angle(-12.0L * r.arg_sum)), static_cast<double>(-12.0L * r.log_abs_sum),
          std::complex<double>(static_cast<double>(r.j.real()), static_cast<double>(r.j.imag()))};
}

LogDeltaValue delta_eval(std::complex<double> z) {
  const ReductionLd r = reduce_ld(cld(z.real(), z.imag()));
  const cld log_delta = log_delta_reduced(r.w);
  return {static_cast<double>(log_delta.real() - 12.0L * r.log_abs_sum),
          static_cast<double>(wrap_angle(log_delta.imag() - 12.0L * r.arg_sum))};
}

std::complex<double> e2_eval(std::complex<double> z) {
  const ReductionLd r = reduce_ld(cld(z.real(), z.imag()));
  // E2(Mz) = j(M,z)^2 E2(z) for the nonholomorphic series.
  const cld value = e2_star_reduced(r.w) / (r.j * r.j);
  return {static_cast<double>(value.real()), static_cast<double>(value.imag())};
}

AxisPoint axis_point(const Mat2& gamma, double t) {
  const Axis ax = make_axis(gamma);
  cld z, dz;
  axis_eval(ax, t, z, dz);
  return {{static_cast<double>(z.real()), static_cast<double>(z.imag())},
          {static_cast<double>(dz.real()), static_cast<double>(dz.imag())}};
}

WindingResult winding_trace(const Mat2& gamma, const WindingOptions& options) {
  const Axis ax = make_axis(gamma);
  // The lifted function is invariant under gamma, so any window of length l
  // is a full period; the symmetric one keeps the path away from the real axis.
  const long double t_begin = -ax.length / 2.0L;
  const long double t_end = ax.length / 2.0L;
  constexpr long double kMaxIncrement = kPi / 4.0L;
  constexpr long double kMinStep = 1e-10L;

  cld z, dz;
  long double y_red = 0.0L;
  axis_eval(ax, t_begin, z, dz);
  long double phase = lifted_phase(z, dz, y_red);
  long double t = t_begin;
  long double total = 0.0L;
  WindingResult result;
  while (t < t_end) {
    long double h = std::min(step_bound(options, y_red), t_end - t);
    for (;;) {
      const long double t_next = (t_end - t <= h) ? t_end : t + h;
      long double y_next = 0.0L;
      axis_eval(ax, t_next, z, dz);
      const long double next_phase = lifted_phase(z, dz, y_next);
      const long double inc = wrap_angle(next_phase - phase);
      if (std::fabs(inc) < kMaxIncrement) {
        total += inc;
        phase = next_phase;
        t = t_next;
        y_red = y_next;
        ++result.steps;
        break;
      }
      h /= 2.0L;
      if (h < kMinStep) throw Error(ErrorKind::StepTooCoarse, "argument increment >= pi/4 at minimal step for " + gamma.str());
    }
  }
  const long double turns = total / (2.0L * kPi);
  result.turns = static_cast<double>(turns);
  result.index = static_cast<std::int64_t>(std::llround(turns));
  result.residual = static_cast<double>(std::fabs(turns - std::round(turns)));
  if (result.residual >= 1e-3)
    throw Error(ErrorKind::ResidualTooLarge, "winding residual " + std::to_string(result.residual) + " for " + gamma.str());
  return result;
}

std::complex<double> e2_period_complex(const Mat2& gamma, const WindingOptions& options) {
  const Axis ax = make_axis(gamma);
  auto integrand = [&](double t) {
    cld z, dz;
    axis_eval(ax, t, z, dz);
    const ReductionLd r = reduce_ld(z);
    const cld v = e2_star_reduced(r.w) / (r.j * r.j) * dz;
    return std::complex<double>(static_cast<double>(v.real()), static_cast<double>(v.imag()));
  };
  // Panels follow the same step bound as the winding tracker.
  std::complex<double> total = 0.0;
  double t = static_cast<double>(-ax.length / 2.0L);
  const double t_end = static_cast<double>(ax.length / 2.0L);
  while (t < t_end) {
    cld z, dz;
    axis_eval(ax, t, z, dz);
    const long double y_red = reduce_ld(z).w.imag();
    const double h = std::min(static_cast<double>(step_bound(options, y_red)), t_end - t);
    const double next = (t_end - t <= h) ? t_end : t + h;
    total += integrate(integrand, t, next, 1e-12 * (next - t), 1e-12, 30).value;
    t = next;
  }
  return total;
}

double e2_period(const Mat2& gamma) {
  const std::complex<double> p = e2_period_complex(gamma);
  if (std::fabs(p.imag()) >= 1e-6)
    throw Error(ErrorKind::QuadratureFailure, "E2 period has imaginary part " + std::to_string(p.imag()));
  return p.real();
}

}  // namespace rwind
