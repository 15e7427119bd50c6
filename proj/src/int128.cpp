#include "rwind/int128.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rwind {

i128 gcd128(i128 x, i128 y) noexcept {
  x = abs128(x);
  y = abs128(y);
  while (y != 0) {
    i128 t = x % y;
    x = y;
    y = t;
  }
  return x;
}

i128 isqrt128(i128 n) {
  if (n < 0) throw Error(ErrorKind::DomainError, "isqrt of negative value");
  if (n < 2) return n;
  auto r = static_cast<i128>(std::sqrt(static_cast<long double>(n)));
  // Correct the floating estimate by at most a few steps in either direction.
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::int64_t to_i64(i128 x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
    throw Error(ErrorKind::Overflow, "value does not fit in 64 bits");
  return static_cast<std::int64_t>(x);
}

std::string to_string(i128 x) {
  if (x == 0) return "0";
  bool neg = x < 0;
  // Work with negative magnitudes so INT128_MIN is representable.
  std::string out;
  while (x != 0) {
    int digit = static_cast<int>(x % 10);
    out.push_back(static_cast<char>('0' + (neg ? -digit : digit)));
    x /= 10;
  }
  if (neg) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

i128 parse_i128(std::string_view text) {
  if (text.empty()) throw Error(ErrorKind::ParseError, "empty integer");
  bool neg = false;
  std::size_t pos = 0;
  if (text[0] == '-' || text[0] == '+') {
    neg = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) throw Error(ErrorKind::ParseError, "missing digits");
  i128 value = 0;
  for (; pos < text.size(); ++pos) {
    char ch = text[pos];
    if (ch < '0' || ch > '9') throw Error(ErrorKind::ParseError, "invalid integer '" + std::string(text) + "'");
    value = checked_add(checked_mul(value, 10), neg ? -(ch - '0') : (ch - '0'));
  }
  return value;
}

}  // namespace rwind
