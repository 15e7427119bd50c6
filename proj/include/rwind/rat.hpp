#pragma once

#include <compare>
#include <string>

#include "rwind/int128.hpp"

namespace rwind {

// Exact rational in canonical form: den > 0, gcd(num, den) = 1.
class Rat {
 public:
  constexpr Rat() = default;
  Rat(i128 num, i128 den = 1);

  i128 num() const noexcept { return num_; }
  i128 den() const noexcept { return den_; }
  bool is_integer() const noexcept { return den_ == 1; }
  double to_double() const noexcept { return static_cast<double>(static_cast<long double>(num_) / static_cast<long double>(den_)); }

  Rat operator-() const { return Rat(-num_, den_); }
  friend Rat operator+(const Rat& x, const Rat& y);
  friend Rat operator-(const Rat& x, const Rat& y) { return x + (-y); }
  friend Rat operator*(const Rat& x, const Rat& y);
  friend Rat operator/(const Rat& x, const Rat& y);
  Rat& operator+=(const Rat& y) { return *this = *this + y; }
  Rat& operator-=(const Rat& y) { return *this = *this - y; }

  friend bool operator==(const Rat&, const Rat&) = default;
  friend std::strong_ordering operator<=>(const Rat& x, const Rat& y);

  std::string str() const;

 private:
  i128 num_ = 0;
  i128 den_ = 1;
};

}  // namespace rwind
