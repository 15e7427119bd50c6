#include <cmath>
#include <numbers>

#include "rwind/geodesics.hpp"
#include "rwind/rademacher.hpp"
#include "rwind/sample.hpp"
#include "support.hpp"

using namespace rwind;

TEST_CASE("phi closed form") {
  for (int a = -5; a <= 5; ++a) CHECK(phi_closed(Mat2::T(a)) == a);
  CHECK(phi_closed(Mat2(3, 1, 2, 1)) == 2);
  CHECK(phi_closed(Mat2::identity()) == 0);
  CHECK(phi_closed(Mat2::minus_identity()) == 0);
  CHECK(phi_closed(-Mat2::T(4)) == 4);
  CHECK(phi_closed(Mat2::S()) == 0);
}

TEST_CASE("phi by cocycle folding") {
  CHECK(phi_word(GenWord{{Generator::T, 3}}) == 3);
  CHECK(phi_word(GenWord{}) == 0);
  const GenWord w{{Generator::T, 1}, {Generator::S, 1}, {Generator::T, -2}, {Generator::S, -1}};
  CHECK(word_product(w) == Mat2(3, 1, 2, 1));
  CHECK(phi_word(w) == 2);
  CHECK(phi_word(GenWord{{Generator::S, 2}}) == 0);
  CHECK(phi_word(GenWord{{Generator::S, 4}}) == 0);

  Rng rng(5);
  for (int i = 0; i < 2000; ++i) {
    const GenWord word = random_gen_word(rng, 6);
    REQUIRE(phi_word(word) == phi_closed(word_product(word)));
  }
  // c = 0 elements with negative diagonal, both routes.
  for (int b = -6; b <= 6; ++b) {
    const Mat2 m = -Mat2::T(b);
    CHECK(phi_word(decompose_ts(m)) == phi_closed(m));
  }
}

TEST_CASE("T,S decomposition reproduces the matrix") {
  Rng rng(9);
  for (int i = 0; i < 500; ++i) {
    const Mat2 m = random_sl2(rng);
    REQUIRE(word_product(decompose_ts(m)) == m);
  }
  CHECK(word_product(decompose_ts(Mat2::minus_identity())) == Mat2::minus_identity());
  CHECK(word_product(decompose_ts(Mat2::identity())) == Mat2::identity());
}

TEST_CASE("psi values") {
  CHECK(psi(Mat2(22, 3, 7, 1)) == -4);
  for (int a = -5; a <= 5; ++a) CHECK(psi(Mat2::T(a)) == a);
  CHECK(psi(Mat2::identity()) == 0);
  CHECK(psi(Mat2(2, 1, 1, 1)) == 0);
  CHECK(psi(-Mat2(22, 3, 7, 1)) == -4);
  CHECK(psi(Mat2::S()) == 0);

  Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    const Mat2 g = random_hyperbolic(rng);
    REQUIRE(psi(g.inverse()) == -psi(g));
    REQUIRE(psi(-g) == psi(g));
    const Mat2 tau = random_sl2(rng, 8);
    REQUIRE(psi(tau * g * tau.inverse()) == psi(g));
  }
}

TEST_CASE("psi from continued fractions") {
  const std::vector<std::int64_t> w37{3, 7}, w11{1, 1}, odd_doubled{2, 5, 1, 2, 5, 1};
  CHECK(psi_cf(w37) == -4);
  CHECK(psi_cf(w11) == 0);
  CHECK(psi_cf(odd_doubled) == 0);
  CHECK_ERROR_KIND(psi_cf(std::vector<std::int64_t>{1, 2, 3}), ErrorKind::OddLength);
  CHECK_ERROR_KIND(psi_cf(std::vector<std::int64_t>{1, 0}), ErrorKind::NonPositiveEntry);
}

TEST_CASE("S symbol") {
  CHECK(s_symbol(Mat2::minus_identity()) == -6);
  CHECK(s_symbol(Mat2::identity()) == 0);
  CHECK(s_symbol(Mat2(22, 3, 7, 1)) == -4);
  CHECK(s_symbol(Mat2::T(3)) == 3);
  Rng rng(13);
  for (int i = 0; i < 500; ++i) {
    const Mat2 g = random_sl2(rng), h = random_sl2(rng);
    REQUIRE(s_symbol(g * h) - s_symbol(g) - s_symbol(h) == 12 * omega(g, h));
    const SymbolValues v = symbols(g);
    const auto diff = v.psi - v.s_symbol;
    REQUIRE((diff == 0 || diff == 3 || diff == -3 || diff == 6 || diff == -6));
    REQUIRE(v.psi == v.phi - kPiOverV * sign(g.c()) * sign(g.trace()));
  }
}

TEST_CASE("multiplier system") {
  for (double r : {0.0, 0.3, 1.0, 2.5, -1.7}) {
    CHECK(std::abs(chi_r(Mat2::identity(), r).value - 1.0) < 1e-12);
    const auto expected = std::polar(1.0, -std::numbers::pi * r);
    CHECK(std::abs(chi_r(Mat2::minus_identity(), r).value - expected) < 1e-12);
  }
  Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    const Mat2 g = random_sl2(rng);
    const auto v = chi_r(g, 12.0).value;
    REQUIRE(std::abs(v - 1.0) < 1e-9);
    REQUIRE(std::abs(std::abs(chi_r(g, 0.37).value) - 1.0) < 1e-12);
  }
}

TEST_CASE("power recursion and limit") {
  const Mat2 g(22, 3, 7, 1);
  Mat2 power = g;
  for (int n = 1; n <= 8; ++n) {
    CHECK(phi_power(g, n) == phi_closed(power));
    CHECK(psi(power) == -4 * n);
    power = power * g;
  }
  // Beyond 128-bit range for the matrix itself.
  const std::int64_t n = 200;
  CHECK(std::fabs(static_cast<double>(phi_power(g, n)) / n - psi(g)) <= 6.0 / n);
  const Mat2 neg(-5, -3, -3, -2);
  Mat2 p2 = neg;
  for (int k = 1; k <= 6; ++k) {
    CHECK(phi_power(neg, k) == phi_closed(p2));
    p2 = p2 * neg;
  }
}
