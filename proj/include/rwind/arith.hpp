#pragma once

// Exact arithmetic primitives on SL(2,Z): Dedekind sums, the arg-j cocycle,
// fixed points of hyperbolic elements and closed-geodesic lengths.

#include <complex>

#include "rwind/mat2.hpp"
#include "rwind/rat.hpp"

namespace rwind {

// s(h,k) = sum_{mu=1}^{k-1} ((mu/k)) ((h mu/k)), computed exactly from
// the Euclidean algorithm on (k, h) in O(log k) steps. Throws NonPositiveModulus if k < 1.
Rat dedekind_sum(i128 h, i128 k);

// Principal argument in (-pi, pi]. A zero imaginary part on the negative real
// axis always yields +pi, regardless of the sign of zero.
long double principal_arg(long double re, long double im) noexcept;

// j(g, z) = cz + d.
std::complex<long double> j_factor(const Mat2& g, std::complex<long double> z);

// omega(g,h) = (arg j(g,hz) + arg j(h,z) - arg j(gh,z)) / 2pi, evaluated at z = i.
// Result is in {-1, 0, 1}; throws NumericalAmbiguity if the unrounded value
// is more than 1e-6 away from an integer.
int omega(const Mat2& g, const Mat2& h);

// p + q sqrt(D), with D > 0 not a perfect square.
struct QuadIrr {
  Rat p;
  Rat q;
  i128 D = 0;

  long double to_long_double() const;
  double to_double() const { return static_cast<double>(to_long_double()); }
};

// alpha is the attracting fixed point, alpha_bar the repelling one.
struct FixedPointPair {
  QuadIrr alpha;
  QuadIrr alpha_bar;
};

// Throws NotHyperbolic unless |trace| > 2.
FixedPointPair fixed_points(const Mat2& gamma);

// l = 2 arccosh(|t|/2). Throws NotHyperbolic unless |t| > 2.
double geodesic_length(i128 trace);

}  // namespace rwind
