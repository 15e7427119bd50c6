#pragma once

// Dedekind symbols Phi and S, the Rademacher symbol Psi and the multiplier
// system chi_r on SL(2,Z). Constants for the modular group: V = pi/3, so
// pi/V = 3 and 2pi/V = 6.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "rwind/arith.hpp"

namespace rwind {

inline constexpr int kPiOverV = 3;

struct SymbolValues {
  std::int64_t phi = 0;
  std::int64_t s_symbol = 0;
  std::int64_t psi = 0;
};

struct MultiplierValue {
  std::complex<double> value;
  double r = 0.0;
};

enum class Generator { T, S };

// One factor g^power of a word in the generators T and S.
struct GenPower {
  Generator gen;
  std::int64_t power;
};

using GenWord = std::vector<GenPower>;

Mat2 word_product(std::span<const GenPower> word);

// Writes gamma as a product of powers of T and S by the Euclidean algorithm.
GenWord decompose_ts(const Mat2& gamma);

// Phi from the Dedekind-sum closed form. Throws NonIntegralPhi if the exact
// rational value is not an integer.
std::int64_t phi_closed(const Mat2& gamma);

// Phi by folding Phi(xy) = Phi(x) + Phi(y) - 3 sign(c_x c_y c_xy) from
// Phi(T^a) = a and Phi(S^{+-1}) = 0.
std::int64_t phi_word(std::span<const GenPower> word);

// Phi(gamma^n) for n >= 1 by the power recursion; only the signs of the lower
// left entries of gamma^k are needed, so n is not limited by overflow.
std::int64_t phi_power(const Mat2& gamma, std::int64_t n);

std::int64_t psi(const Mat2& gamma);

// S recovered from Psi; c = 0 elements with negative diagonal go through
// S(-g) = S(-I) + S(g) + 12 omega(-I, g).
std::int64_t s_symbol(const Mat2& gamma);

SymbolValues symbols(const Mat2& gamma);

// chi_r(gamma) = exp(i pi r S(gamma) / 6).
MultiplierValue chi_r(const Mat2& gamma, double r);

}  // namespace rwind
