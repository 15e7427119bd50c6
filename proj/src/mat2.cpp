#include "rwind/mat2.hpp"

namespace rwind {

Mat2::Mat2(i128 a, i128 b, i128 c, i128 d) : a_(a), b_(b), c_(c), d_(d) {
  i128 det = checked_sub(checked_mul(a, d), checked_mul(b, c));
  if (det != 1) throw Error(ErrorKind::NonUnimodular, "determinant " + to_string(det) + " for " + str());
}

std::string Mat2::str() const {
  return "(" + to_string(a_) + " " + to_string(b_) + "; " + to_string(c_) + " " + to_string(d_) + ")";
}

Mat2 mat_mul(const Mat2& x, const Mat2& y) {
  auto dot = [](i128 p, i128 q, i128 r, i128 s) { return checked_add(checked_mul(p, q), checked_mul(r, s)); };
  return {dot(x.a(), y.a(), x.b(), y.c()), dot(x.a(), y.b(), x.b(), y.d()),
          dot(x.c(), y.a(), x.d(), y.c()), dot(x.c(), y.b(), x.d(), y.d())};
}

Mat2 mat_pow(const Mat2& m, long long n) {
  Mat2 base = n < 0 ? m.inverse() : m;
  unsigned long long e = n < 0 ? 0ULL - static_cast<unsigned long long>(n) : static_cast<unsigned long long>(n);
  Mat2 result = Mat2::identity();
  while (e != 0) {
    if (e & 1ULL) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

}  // namespace rwind
