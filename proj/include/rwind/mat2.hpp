#pragma once

#include <string>

#include "rwind/int128.hpp"

namespace rwind {

// Element of SL(2,Z). The constructor enforces ad - bc = 1.
class Mat2 {
 public:
  Mat2(i128 a, i128 b, i128 c, i128 d);

  static Mat2 identity() { return {1, 0, 0, 1}; }
  static Mat2 minus_identity() { return {-1, 0, 0, -1}; }
  static Mat2 T(i128 power = 1) { return {1, power, 0, 1}; }
  static Mat2 S() { return {0, -1, 1, 0}; }
  // U^n = (1 0; n 1).
  static Mat2 U(i128 power = 1) { return {1, 0, power, 1}; }

  i128 a() const noexcept { return a_; }
  i128 b() const noexcept { return b_; }
  i128 c() const noexcept { return c_; }
  i128 d() const noexcept { return d_; }

  i128 trace() const { return checked_add(a_, d_); }
  Mat2 inverse() const { return {d_, -b_, -c_, a_}; }
  Mat2 operator-() const { return {-a_, -b_, -c_, -d_}; }

  // Hyperbolic iff |trace| > 2.
  bool is_hyperbolic() const { return abs128(trace()) > 2; }

  friend bool operator==(const Mat2&, const Mat2&) = default;

  std::string str() const;

 private:
  i128 a_, b_, c_, d_;
};

Mat2 mat_mul(const Mat2& x, const Mat2& y);
inline Mat2 operator*(const Mat2& x, const Mat2& y) { return mat_mul(x, y); }

// Integer power, negative exponents via the inverse.
Mat2 mat_pow(const Mat2& m, long long n);

}  // namespace rwind
