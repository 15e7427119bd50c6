#include "rwind/rademacher.hpp"

#include <cmath>
#include <numbers>

namespace rwind {

namespace {

Mat2 gen_power(const GenPower& g) {
  if (g.gen == Generator::T) return Mat2::T(g.power);
  // S has order 4.
  switch (static_cast<int>(floor_mod(g.power, 4))) {
    case 0: return Mat2::identity();
    case 1: return Mat2::S();
    case 2: return Mat2::minus_identity();
    default: return Mat2::S().inverse();
  }
}

}  // namespace

Mat2 word_product(std::span<const GenPower> word) {
  Mat2 m = Mat2::identity();
  for (const auto& g : word) m = m * gen_power(g);
  return m;
}

GenWord decompose_ts(const Mat2& gamma) {
  // gamma = T^q * S * rest, where rest = S^{-1} T^{-q} gamma has lower-left
  // entry -(a - qc); choosing q = floor(a/c) shrinks |c| strictly.
  GenWord out;
  Mat2 m = gamma;
  while (m.c() != 0) {
    i128 q = floor_div(m.a(), m.c());
    if (q != 0) out.push_back({Generator::T, to_i64(q)});
    m = Mat2::T(-q) * m;
    out.push_back({Generator::S, 1});
    m = Mat2::S().inverse() * m;
  }
  // m = +-T^b.
  if (m.a() == -1) {
    out.push_back({Generator::S, 2});
    m = -m;
  }
  if (m.b() != 0) out.push_back({Generator::T, to_i64(m.b())});
  return out;
}

std::int64_t phi_closed(const Mat2& gamma) {
  const i128 c = gamma.c();
  Rat value;
  if (c == 0) {
    value = Rat(gamma.b(), gamma.d());
  } else {
    value = Rat(gamma.trace(), c) - Rat(12 * sign(c)) * dedekind_sum(gamma.d(), abs128(c));
  }
  if (!value.is_integer()) throw Error(ErrorKind::NonIntegralPhi, value.str() + " for " + gamma.str());
  return to_i64(value.num());
}

std::int64_t phi_word(std::span<const GenPower> word) {
  std::int64_t phi = 0;
  Mat2 acc = Mat2::identity();
  auto fold = [&](const Mat2& factor, std::int64_t factor_phi) {
    Mat2 next = acc * factor;
    phi = phi + factor_phi - kPiOverV * sign(acc.c()) * sign(factor.c()) * sign(next.c());
    acc = next;
  };
  for (const auto& g : word) {
    if (g.gen == Generator::T) {
      fold(Mat2::T(g.power), g.power);
    } else {
      const bool forward = g.power > 0;
      const Mat2 step = forward ? Mat2::S() : Mat2::S().inverse();
      for (std::int64_t k = 0; k < (forward ? g.power : -g.power); ++k) fold(step, 0);
    }
  }
  return phi;
}

std::int64_t phi_power(const Mat2& gamma, std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::DomainError, "phi_power needs n >= 1");
  // c_{gamma^k} = c * u_k with u_0 = 0, u_1 = 1, u_{k+1} = t u_k - u_{k-1}.
  // Only sign(u_k) matters: it is +1 for t >= 2, (-1)^{k+1} for t <= -2, and
  // periodic for |t| < 2, where the recurrence stays bounded.
  const i128 t = gamma.trace();
  const int sc = sign(gamma.c());
  auto usign = [&](std::int64_t k) -> int {
    if (k == 0) return 0;
    if (t >= 2) return 1;
    if (t <= -2) return (k % 2 == 1) ? 1 : -1;
    i128 prev = 0, cur = 1;
    for (std::int64_t i = 1; i < k; ++i) {
      i128 next = t * cur - prev;
      prev = cur;
      cur = next;
    }
    return sign(cur);
  };
  std::int64_t phi = n * phi_closed(gamma);
  for (std::int64_t k = 1; k < n; ++k) phi -= kPiOverV * sc * (sc * usign(k)) * (sc * usign(k + 1));
  return phi;
}

std::int64_t psi(const Mat2& gamma) {
  return phi_closed(gamma) - kPiOverV * sign(gamma.c()) * sign(gamma.trace());
}

std::int64_t s_symbol(const Mat2& gamma) {
  const i128 c = gamma.c();
  if (c == 0) {
    // +T^b: S = Psi = Phi = b. -T^b = (-I) T^b and omega(-I, T^b) = 0.
    const std::int64_t b_part = psi(gamma);
    if (gamma.d() == 1) return b_part;
    return -2 * kPiOverV + b_part + 4 * kPiOverV * omega(Mat2::minus_identity(), -gamma);
  }
  const std::int64_t p = psi(gamma);
  const i128 t = gamma.trace();
  if (t > 0) return p;
  if (t == 0) return p - kPiOverV * sign(c);
  return p - 2 * kPiOverV * sign(c);
}

SymbolValues symbols(const Mat2& gamma) { return {phi_closed(gamma), s_symbol(gamma), psi(gamma)}; }

MultiplierValue chi_r(const Mat2& gamma, double r) {
  const double phase = std::numbers::pi * r * static_cast<double>(s_symbol(gamma)) / 6.0;
  return {std::polar(1.0, phase), r};
}

}  // namespace rwind
