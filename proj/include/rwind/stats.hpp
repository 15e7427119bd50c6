#pragma once

// Statistics of prime geodesics by winding number, compared against the
// closed-form asymptotic predictions.

#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <span>
#include <vector>

#include "rwind/geodesics.hpp"

namespace rwind {

struct WindingHistogram {
  double T = 0.0;
  std::map<std::int64_t, std::int64_t> counts;  // psi -> pi_n(T)
  std::int64_t total = 0;
};

// Records with length > T are ignored, so a larger enumeration can be reused.
WindingHistogram winding_histogram(std::span<const GeodesicRecord> records, double T);

// (4/(kT)) * integral_2^{e^T} log t / (log^2 t + (4 pi n/k)^2) dt.
double predicted_pi_n(std::int64_t n, double T, int k = 12);

// (4/k) T / (T^2 + (4 pi n/k)^2), the density of winding n among pi(T).
double winding_density(std::int64_t n, double T, int k = 12);

struct DensityRow {
  std::int64_t n = 0;
  double empirical = 0.0;  // pi_n / pi
  double predicted = 0.0;
  double ratio = 0.0;
};

// One row per n in [n_min, n_max]. Throws InsufficientData on an empty histogram.
std::vector<DensityRow> density_table(const WindingHistogram& hist, std::int64_t n_min, std::int64_t n_max);

inline double cauchy_cdf(double u) { return 0.5 + std::atan(u) / std::numbers::pi; }

inline constexpr double kCauchyScale = 3.0 / std::numbers::pi;
inline constexpr std::int64_t kMinSampleSize = 1000;

struct CdfSample {
  double u = 0.0;
  double empirical = 0.0;
  double reference = 0.0;
};

struct DistributionReport {
  double ks_statistic = 0.0;
  std::int64_t sample_size = 0;
  double scale = kCauchyScale;
  std::vector<CdfSample> samples;  // u = -5, -4.75, ..., 5
};

// Kolmogorov-Smirnov distance of the sample to the standard Cauchy law.
double ks_cauchy(std::vector<double> values);

// KS comparison of scale * psi / length against the standard Cauchy CDF.
// Throws InsufficientData if fewer than 1000 classes have length <= T.
DistributionReport cauchy_compare(std::span<const GeodesicRecord> records, double T, double scale = kCauchyScale);

struct ResidueRow {
  std::int64_t residue = 0;
  std::int64_t count = 0;
  double density = 0.0;
  double reference = 0.0;
};

// Fraction of classes with psi = a (mod q) for a = 0..q-1. Throws DomainError
// for q < 1 and InsufficientData below 1000 classes.
std::vector<ResidueRow> equidistribution(std::span<const GeodesicRecord> records, double T, std::int64_t q);

struct TwistedSumReport {
  double r = 0.0;
  std::complex<double> sum;
  // e^{T(1-|r|/2)} / (1 - |r|/2); only meaningful when main_term_valid.
  double main_term = 0.0;
  double relative_error = 0.0;
  bool main_term_valid = false;  // |r| < 1/2
};

// Sum of exp(2 pi i r psi / 12) * length over classes with length <= T.
TwistedSumReport twisted_sum(std::span<const GeodesicRecord> records, double T, double r);

// Offset logarithmic integral: integral_2^x dt / log t. Throws DomainError for x < 2.
double li(double x);

}  // namespace rwind
