#include "rwind/stats.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/special_functions/expint.hpp>

#include "rwind/error.hpp"
#include "rwind/quadrature.hpp"

namespace rwind {

namespace {

constexpr double kPi = std::numbers::pi;

template <typename F>
void for_each_within(std::span<const GeodesicRecord> records, double T, F&& f) {
  for (const GeodesicRecord& rec : records)
    if (rec.length <= T) f(rec);
}

void require_sample(std::int64_t n, double T) {
  if (n < kMinSampleSize)
    throw Error(ErrorKind::InsufficientData,
                std::to_string(n) + " classes with length <= " + std::to_string(T) + ", need " + std::to_string(kMinSampleSize));
}

}  // namespace

WindingHistogram winding_histogram(std::span<const GeodesicRecord> records, double T) {
  WindingHistogram hist;
  hist.T = T;
  for_each_within(records, T, [&](const GeodesicRecord& rec) {
    ++hist.counts[rec.psi];
    ++hist.total;
  });
  return hist;
}

double predicted_pi_n(std::int64_t n, double T, int k) {
  if (!(T >= 2.0)) throw Error(ErrorKind::DomainError, "predicted_pi_n needs T >= 2");
  const double c = 4.0 * kPi * static_cast<double>(n) / k;
  const double c2 = c * c;
  auto f = [c2](double u) { return u * std::exp(u) / (u * u + c2); };
  const auto q = integrate(f, std::log(2.0), T, 0.0, 1e-10);
  return 4.0 / (k * T) * q.value;
}

double winding_density(std::int64_t n, double T, int k) {
  const double c = 4.0 * kPi * static_cast<double>(n) / k;
  return 4.0 / k * T / (T * T + c * c);
}

std::vector<DensityRow> density_table(const WindingHistogram& hist, std::int64_t n_min, std::int64_t n_max) {
  if (hist.total == 0) throw Error(ErrorKind::InsufficientData, "empty histogram");
  std::vector<DensityRow> rows;
  for (std::int64_t n = n_min; n <= n_max; ++n) {
    DensityRow row;
    row.n = n;
    const auto it = hist.counts.find(n);
    row.empirical = it == hist.counts.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(hist.total);
    row.predicted = winding_density(n, hist.T);
    row.ratio = row.empirical / row.predicted;
    rows.push_back(row);
  }
  return rows;
}

double ks_cauchy(std::vector<double> values) {
  if (values.empty()) throw Error(ErrorKind::InsufficientData, "empty sample");
  std::sort(values.begin(), values.end());
  const auto n = static_cast<double>(values.size());
  double d = 0.0;
  std::size_t i = 0;
  while (i < values.size()) {
    std::size_t j = i;
    while (j < values.size() && values[j] == values[i]) ++j;
    // The empirical CDF jumps from i/n to j/n at a run of tied values.
    const double f = cauchy_cdf(values[i]);
    d = std::max({d, std::fabs(f - static_cast<double>(i) / n), std::fabs(static_cast<double>(j) / n - f)});
    i = j;
  }
  return d;
}

DistributionReport cauchy_compare(std::span<const GeodesicRecord> records, double T, double scale) {
  std::vector<double> values;
  for_each_within(records, T, [&](const GeodesicRecord& rec) {
    values.push_back(scale * static_cast<double>(rec.psi) / rec.length);
  });
  require_sample(static_cast<std::int64_t>(values.size()), T);

  DistributionReport report;
  report.sample_size = static_cast<std::int64_t>(values.size());
  report.scale = scale;
  report.ks_statistic = ks_cauchy(values);
  std::sort(values.begin(), values.end());
  for (int i = -20; i <= 20; ++i) {
    const double u = 0.25 * i;
    const auto below = std::upper_bound(values.begin(), values.end(), u) - values.begin();
    report.samples.push_back({u, static_cast<double>(below) / static_cast<double>(values.size()), cauchy_cdf(u)});
  }
  return report;
}

std::vector<ResidueRow> equidistribution(std::span<const GeodesicRecord> records, double T, std::int64_t q) {
  if (q < 1) throw Error(ErrorKind::DomainError, "modulus must be positive");
  std::vector<ResidueRow> rows(static_cast<std::size_t>(q));
  std::int64_t total = 0;
  for_each_within(records, T, [&](const GeodesicRecord& rec) {
    ++rows[static_cast<std::size_t>(((rec.psi % q) + q) % q)].count;
    ++total;
  });
  require_sample(total, T);
  for (std::int64_t a = 0; a < q; ++a) {
    auto& row = rows[static_cast<std::size_t>(a)];
    row.residue = a;
    row.density = static_cast<double>(row.count) / static_cast<double>(total);
    row.reference = 1.0 / static_cast<double>(q);
  }
  return rows;
}

TwistedSumReport twisted_sum(std::span<const GeodesicRecord> records, double T, double r) {
  TwistedSumReport report;
  report.r = r;
  std::complex<double> sum = 0.0;
  for_each_within(records, T, [&](const GeodesicRecord& rec) {
    // The phase r psi is reduced mod 12 first so that r = 12 gives exactly 1.
    const double turns = std::fmod(r * static_cast<double>(rec.psi), 12.0) / 12.0;
    sum += std::polar(rec.length, 2.0 * kPi * turns);
  });
  report.sum = sum;
  const double s0 = 1.0 - std::fabs(r) / 2.0;
  report.main_term_valid = std::fabs(r) < 0.5;
  if (s0 > 0.0) {
    report.main_term = std::exp(T * s0) / s0;
    report.relative_error = std::abs(sum - report.main_term) / report.main_term;
  } else {
    report.main_term = std::nan("");
    report.relative_error = std::nan("");
  }
  return report;
}

double li(double x) {
  if (!(x >= 2.0)) throw Error(ErrorKind::DomainError, "li needs x >= 2");
  if (x == 2.0) return 0.0;
  using boost::math::expint;
  return expint(std::log(x)) - expint(std::log(2.0));
}

}  // namespace rwind
