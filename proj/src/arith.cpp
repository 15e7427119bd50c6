#include "rwind/arith.hpp"

#include <cmath>
#include <numbers>

namespace rwind {

Rat dedekind_sum(i128 h, i128 k) {
  if (k < 1) throw Error(ErrorKind::NonPositiveModulus, "k = " + to_string(k));
  h = floor_mod(h, k);
  const i128 g = gcd128(h, k);
  h /= g;
  k /= g;
  if (k == 1) return Rat(0);
  // Telescoping reciprocity along the Euclidean remainders r_0 = k, r_1 = h:
  // 12 k s(h,k) = k sum (-1)^{i+1} q_i + h + e - 3k [n odd], where n is the
  // number of division steps and e = h^{-1} mod k (minus k when n is even).
  // Every intermediate stays below k^2.
  i128 r0 = k, r1 = h;
  i128 x0 = 0, x1 = 1;  // r_i = x_i h (mod k)
  i128 alternating = 0;
  int steps = 0;
  while (r1 != 0) {
    const i128 q = r0 / r1;
    alternating += (steps % 2 == 0) ? q : -q;
    ++steps;
    const i128 r2 = r0 - q * r1;
    const i128 x2 = x0 - q * x1;
    r0 = r1;
    r1 = r2;
    x0 = x1;
    x1 = x2;
  }
  const i128 inverse = floor_mod(x0, k);
  const bool odd = steps % 2 == 1;
  const i128 e = odd ? inverse : inverse - k;
  i128 numerator = checked_add(checked_mul(k, alternating), h + e);
  if (odd) numerator = checked_sub(numerator, checked_mul(3, k));
  return Rat(numerator, checked_mul(12, k));
}

long double principal_arg(long double re, long double im) noexcept {
  if (im == 0.0L) return re > 0.0L ? 0.0L : std::numbers::pi_v<long double>;
  return std::atan2(im, re);
}

std::complex<long double> j_factor(const Mat2& g, std::complex<long double> z) {
  auto c = static_cast<long double>(g.c());
  auto d = static_cast<long double>(g.d());
  // Keep the imaginary part an exact zero when c = 0.
  long double im = g.c() == 0 ? 0.0L : c * z.imag();
  return {c * z.real() + d, im};
}

namespace {

std::complex<long double> act(const Mat2& g, std::complex<long double> z) {
  std::complex<long double> num(static_cast<long double>(g.a()) * z.real() + static_cast<long double>(g.b()),
                                static_cast<long double>(g.a()) * z.imag());
  return num / j_factor(g, z);
}

long double arg_j(const Mat2& g, std::complex<long double> z) {
  auto j = j_factor(g, z);
  return principal_arg(j.real(), j.imag());
}

}  // namespace

int omega(const Mat2& g, const Mat2& h) {
  const std::complex<long double> z(0.0L, 1.0L);
  const Mat2 gh = g * h;
  long double value = (arg_j(g, act(h, z)) + arg_j(h, z) - arg_j(gh, z)) / (2.0L * std::numbers::pi_v<long double>);
  long double rounded = std::round(value);
  if (std::fabs(value - rounded) > 1e-6L)
    throw Error(ErrorKind::NumericalAmbiguity, "omega residual too large for " + g.str() + ", " + h.str());
  return static_cast<int>(rounded);
}

long double QuadIrr::to_long_double() const {
  auto as_ld = [](const Rat& r) { return static_cast<long double>(r.num()) / static_cast<long double>(r.den()); };
  return as_ld(p) + as_ld(q) * std::sqrt(static_cast<long double>(D));
}

FixedPointPair fixed_points(const Mat2& gamma) {
  const i128 t = gamma.trace();
  if (abs128(t) <= 2) throw Error(ErrorKind::NotHyperbolic, "trace " + to_string(t) + " of " + gamma.str());
  const i128 D = checked_sub(checked_mul(t, t), 4);
  const i128 two_c = checked_mul(2, gamma.c());
  const Rat p(checked_sub(gamma.a(), gamma.d()), two_c);
  const Rat q(1, two_c);
  // (a-d+sqrt D)/2c has eigenvalue (t+sqrt D)/2, which exceeds 1 in modulus iff t > 2.
  QuadIrr plus{p, q, D};
  QuadIrr minus{p, -q, D};
  if (t > 0) return {plus, minus};
  return {minus, plus};
}

double geodesic_length(i128 trace) {
  if (abs128(trace) <= 2) throw Error(ErrorKind::NotHyperbolic, "trace " + to_string(trace));
  const long double half = static_cast<long double>(abs128(trace)) / 2.0L;
  return static_cast<double>(2.0L * std::acosh(half));
}

}  // namespace rwind
