#include <cmath>
#include <numbers>

#include "rwind/quadrature.hpp"
#include "rwind/sample.hpp"
#include "rwind/stats.hpp"
#include "support.hpp"

using namespace rwind;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<GeodesicRecord> records_to(double T) {
  EnumerationConfig config;
  config.max_length = T;
  return enumerate(config);
}

// Brute-force KS: sup over the sample points of both one-sided gaps.
double ks_direct(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const double n = static_cast<double>(v.size());
  double d = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double below = static_cast<double>(std::lower_bound(v.begin(), v.end(), v[i]) - v.begin()) / n;
    const double upto = static_cast<double>(std::upper_bound(v.begin(), v.end(), v[i]) - v.begin()) / n;
    d = std::max({d, std::fabs(cauchy_cdf(v[i]) - below), std::fabs(cauchy_cdf(v[i]) - upto)});
  }
  return d;
}

}  // namespace

TEST_CASE("quadrature") {
  const auto q = integrate([](double x) { return std::exp(x); }, 0.0, 1.0, 1e-14, 1e-14);
  CHECK(q.value == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-14));
  const auto osc = integrate([](double x) { return std::cos(50 * x); }, 0.0, 3.0, 1e-12, 1e-12);
  CHECK(osc.value == doctest::Approx(std::sin(150.0) / 50.0).epsilon(1e-10));
  const auto cplx = integrate([](double x) { return std::polar(1.0, x); }, 0.0, kPi, 1e-13, 1e-13);
  CHECK(std::abs(cplx.value - std::complex<double>(0.0, 2.0)) < 1e-12);
  CHECK(integrate([](double) { return 1.0; }, 2.0, 2.0, 1e-12, 1e-12).value == 0.0);
  CHECK_ERROR_KIND(integrate([](double x) { return 1.0 / x; }, -1.0, 1.0, 1e-12, 1e-12, 8), ErrorKind::QuadratureFailure);
}

TEST_CASE("winding histogram") {
  EnumerationConfig small;
  small.max_length = kMaxLength;
  small.trace_cap = 5;
  const auto five = enumerate(small);
  const WindingHistogram h = winding_histogram(five, 10.0);
  CHECK(h.total == 5);
  CHECK(h.counts.size() == 5);
  for (std::int64_t n = -2; n <= 2; ++n) CHECK(h.counts.at(n) == 1);

  const WindingHistogram empty = winding_histogram({}, 10.0);
  CHECK(empty.total == 0);
  CHECK(empty.counts.empty());

  // Records beyond T are ignored.
  CHECK(winding_histogram(five, 2.0).total == 1);

  const auto records = records_to(12.0);
  const WindingHistogram h12 = winding_histogram(records, 12.0);
  std::int64_t sum = 0;
  for (const auto& [n, c] : h12.counts) {
    sum += c;
    CHECK(h12.counts.at(-n) == c);
  }
  CHECK(sum == h12.total);
  CHECK(h12.total == static_cast<std::int64_t>(records.size()));
}

TEST_CASE("predicted counts") {
  const double T = 14.0;
  CHECK(predicted_pi_n(0, T) == doctest::Approx(li(std::exp(T)) / 42.0).epsilon(1e-8));
  for (int n = 1; n <= 6; ++n) CHECK(predicted_pi_n(n, T) == predicted_pi_n(-n, T));
  CHECK(predicted_pi_n(1, T) < predicted_pi_n(0, T));
  CHECK_ERROR_KIND(predicted_pi_n(0, 1.0), ErrorKind::DomainError);

  // Summed over n: sum_n u / (u^2 + (pi n/3)^2) = 3 coth(3u), so the total is
  // (1/T) integral e^u coth(3u) du.
  const auto full = integrate([](double u) { return std::exp(u) / std::tanh(3.0 * u); }, std::log(2.0), T, 0.0, 1e-12);
  const double target = full.value / T;
  double sum = predicted_pi_n(0, T);
  const int N = 3000;
  for (int n = 1; n <= N; ++n) sum += 2.0 * predicted_pi_n(n, T);
  // The omitted tail is about 18 T / (pi^2 N) relative to 3.
  CHECK(sum / target == doctest::Approx(1.0).epsilon(0.004));
  CHECK(sum < target);
}

TEST_CASE("density prediction") {
  CHECK(winding_density(0, 14.0) == doctest::Approx(1.0 / 42.0));
  for (int n = 0; n < 10; ++n) {
    CHECK(winding_density(n, 14.0) == winding_density(-n, 14.0));
    CHECK(winding_density(n + 1, 14.0) < winding_density(n, 14.0));
  }
  const auto records = records_to(10.0);
  const auto rows = density_table(winding_histogram(records, 10.0), -5, 5);
  REQUIRE(rows.size() == 11);
  CHECK(rows.front().n == -5);
  CHECK(rows[5].ratio == doctest::Approx(rows[5].empirical / rows[5].predicted));
  CHECK_ERROR_KIND(density_table(WindingHistogram{}, 0, 1), ErrorKind::InsufficientData);
}

TEST_CASE("Cauchy comparison") {
  CHECK(cauchy_cdf(0.0) == 0.5);
  CHECK(cauchy_cdf(1.0) == doctest::Approx(0.75));
  CHECK(ks_cauchy({0.0}) == doctest::Approx(0.5));
  CHECK(ks_cauchy({0.0, 0.0, 0.0}) == doctest::Approx(0.5));
  CHECK_ERROR_KIND(ks_cauchy({}), ErrorKind::InsufficientData);

  Rng rng(53);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> draws;
  for (int i = 0; i < 20000; ++i) draws.push_back(std::tan(kPi * (u(rng) - 0.5)));
  CHECK(ks_cauchy(draws) < 0.02);
  CHECK(ks_cauchy(draws) == doctest::Approx(ks_direct(draws)).epsilon(1e-12));
  std::vector<double> tied{-1.0, 0.0, 0.0, 0.5, 0.5, 0.5, 3.0};
  CHECK(ks_cauchy(tied) == doctest::Approx(ks_direct(tied)));

  const auto records = records_to(12.0);
  const DistributionReport report = cauchy_compare(records, 12.0);
  CHECK(report.sample_size == static_cast<std::int64_t>(records.size()));
  CHECK(report.ks_statistic >= 0.0);
  CHECK(report.ks_statistic <= 0.1);
  REQUIRE(report.samples.size() == 41);
  CHECK(report.samples[20].u == 0.0);
  CHECK(report.samples[20].reference == 0.5);
  std::vector<double> values;
  for (const auto& r : records) values.push_back(kCauchyScale * static_cast<double>(r.psi) / r.length);
  CHECK(report.ks_statistic == doctest::Approx(ks_direct(values)).epsilon(1e-12));
  CHECK(cauchy_compare(records, 12.0, kPi / 3.0).scale == kPi / 3.0);
  CHECK_ERROR_KIND(cauchy_compare(records, 6.0), ErrorKind::InsufficientData);
}

TEST_CASE("equidistribution") {
  const auto records = records_to(10.0);
  const auto one = equidistribution(records, 10.0, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].density == 1.0);
  for (std::int64_t q : {2, 3, 5, 7}) {
    const auto rows = equidistribution(records, 10.0, q);
    REQUIRE(rows.size() == static_cast<std::size_t>(q));
    std::int64_t total = 0;
    for (const auto& row : rows) {
      total += row.count;
      CHECK(row.reference == doctest::Approx(1.0 / static_cast<double>(q)));
    }
    CHECK(total == static_cast<std::int64_t>(records.size()));
  }
  CHECK_ERROR_KIND(equidistribution(records, 10.0, 0), ErrorKind::DomainError);
  CHECK_ERROR_KIND(equidistribution(records, 5.0, 2), ErrorKind::InsufficientData);
}

TEST_CASE("twisted sums") {
  const auto records = records_to(10.0);
  double lengths = 0.0;
  for (const auto& r : records) lengths += r.length;
  const TwistedSumReport zero = twisted_sum(records, 10.0, 0.0);
  CHECK(zero.sum.imag() == 0.0);
  CHECK(zero.sum.real() == doctest::Approx(lengths).epsilon(1e-14));
  CHECK(zero.main_term == doctest::Approx(std::exp(10.0)));
  CHECK(zero.main_term_valid);
  CHECK(std::abs(twisted_sum(records, 10.0, 12.0).sum - zero.sum) <= 1e-9);
  CHECK(std::abs(twisted_sum(records, 10.0, -12.0).sum - zero.sum) <= 1e-9);
  const auto plus = twisted_sum(records, 10.0, 0.3), minus = twisted_sum(records, 10.0, -0.3);
  CHECK(std::abs(plus.sum - std::conj(minus.sum)) < 1e-9);
  CHECK(plus.main_term == doctest::Approx(std::exp(10.0 * 0.85) / 0.85));
  CHECK(plus.relative_error == doctest::Approx(std::abs(plus.sum - plus.main_term) / plus.main_term));
  CHECK_FALSE(twisted_sum(records, 10.0, 0.5).main_term_valid);
  CHECK(std::isnan(twisted_sum(records, 10.0, 3.0).main_term));
}

TEST_CASE("logarithmic integral") {
  CHECK(li(2.0) == 0.0);
  const double e = std::exp(1.0);
  const double band = li(e * e) - li(e);
  CHECK(band > (e * e - e) / 2.0);
  CHECK(band < (e * e - e));
  const auto oracle = integrate([](double u) { return std::exp(u) / u; }, std::log(2.0), std::log(1e6), 0.0, 1e-13);
  CHECK(li(1e6) == doctest::Approx(oracle.value).epsilon(1e-10));
  CHECK(li(1e6) == doctest::Approx(78626.503995682).epsilon(1e-10));
  CHECK_ERROR_KIND(li(1.5), ErrorKind::DomainError);
  CHECK_ERROR_KIND(li(std::nan("")), ErrorKind::DomainError);
}
