#include "rwind/rat.hpp"

namespace rwind {

Rat::Rat(i128 num, i128 den) {
  if (den == 0) throw Error(ErrorKind::DomainError, "zero denominator");
  if (den < 0) {
    num = checked_sub(0, num);
    den = checked_sub(0, den);
  }
  i128 g = gcd128(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rat operator+(const Rat& x, const Rat& y) {
  // Reduce by gcd of denominators first to keep intermediates small.
  i128 g = gcd128(x.den_, y.den_);
  i128 xs = y.den_ / g;
  i128 ys = x.den_ / g;
  return Rat(checked_add(checked_mul(x.num_, xs), checked_mul(y.num_, ys)), checked_mul(x.den_, xs));
}

Rat operator*(const Rat& x, const Rat& y) {
  i128 g1 = gcd128(x.num_, y.den_);
  i128 g2 = gcd128(y.num_, x.den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  return Rat(checked_mul(x.num_ / g1, y.num_ / g2), checked_mul(x.den_ / g2, y.den_ / g1));
}

Rat operator/(const Rat& x, const Rat& y) {
  if (y.num_ == 0) throw Error(ErrorKind::DomainError, "division by zero rational");
  return x * Rat(y.den_, y.num_);
}

std::strong_ordering operator<=>(const Rat& x, const Rat& y) {
  i128 lhs = checked_mul(x.num_, y.den_);
  i128 rhs = checked_mul(y.num_, x.den_);
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rat::str() const {
  return den_ == 1 ? to_string(num_) : to_string(num_) + "/" + to_string(den_);
}

}  // namespace rwind
