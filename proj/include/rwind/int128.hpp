#pragma once

// Checked 128-bit signed arithmetic. Overflow is always an error, never a wrap.

#include <cstdint>
#include <string>
#include <string_view>

#include "rwind/error.hpp"

namespace rwind {

using i128 = __int128;

inline i128 checked_add(i128 x, i128 y) {
  i128 r;
  if (__builtin_add_overflow(x, y, &r)) throw Error(ErrorKind::Overflow, "128-bit addition");
  return r;
}

inline i128 checked_sub(i128 x, i128 y) {
  i128 r;
  if (__builtin_sub_overflow(x, y, &r)) throw Error(ErrorKind::Overflow, "128-bit subtraction");
  return r;
}

inline i128 checked_mul(i128 x, i128 y) {
  i128 r;
  if (__builtin_mul_overflow(x, y, &r)) throw Error(ErrorKind::Overflow, "128-bit multiplication");
  return r;
}

constexpr int sign(i128 x) noexcept { return (x > 0) - (x < 0); }
constexpr i128 abs128(i128 x) noexcept { return x < 0 ? -x : x; }

// Floor division for signed operands (d != 0).
constexpr i128 floor_div(i128 n, i128 d) noexcept {
  i128 q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
  return q;
}

constexpr i128 floor_mod(i128 n, i128 d) noexcept { return n - floor_div(n, d) * d; }

i128 gcd128(i128 x, i128 y) noexcept;

// floor(sqrt(n)) for n >= 0.
i128 isqrt128(i128 n);

// Narrowing conversion that fails loudly.
std::int64_t to_i64(i128 x);

std::string to_string(i128 x);
i128 parse_i128(std::string_view text);

}  // namespace rwind
