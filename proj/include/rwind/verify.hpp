#pragma once

// Property and regression suites run by `rwind verify` and the acceptance
// binary.

#include <cstdint>
#include <string>
#include <vector>

#include "rwind/geodesics.hpp"

namespace rwind {

struct SuiteResult {
  std::string suite;
  std::int64_t passed = 0;
  std::int64_t failed = 0;
  std::vector<std::string> details;

  bool ok() const { return failed == 0 && passed > 0; }
};

struct VerifyConfig {
  double max_length = 12.0;
  std::size_t sample = 500;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

// Statistical suites run only when max_length reaches this value.
inline constexpr double kStatsLength = 14.0;

// Exact agreement of psi_cf, the Dedekind closed form and the cocycle fold
// on every record.
SuiteResult check_three_way(const std::vector<GeodesicRecord>& records);
// enumerate against brute_force_classes for every trace cap 3..max_cap.
SuiteResult check_enumeration_oracle(std::int64_t max_cap);
SuiteResult check_winding_index(const std::vector<CyclicWord>& sample, std::uint64_t seed);
SuiteResult check_e2_period(const std::vector<CyclicWord>& sample);
SuiteResult check_histogram_symmetry(const std::vector<GeodesicRecord>& records, const std::vector<double>& lengths);

SuiteResult check_dedekind_reciprocity(std::uint64_t seed, int count = 1000);
SuiteResult check_omega_cocycle(std::uint64_t seed, int count = 1000);
SuiteResult check_multiplier_law(std::uint64_t seed, int count = 1000);
SuiteResult check_s_cocycle(std::uint64_t seed, int count = 1000);
SuiteResult check_psi_inverse(std::uint64_t seed, int count = 1000);
SuiteResult check_psi_conjugacy(std::uint64_t seed, int count = 1000);
SuiteResult check_psi_homogeneity(std::uint64_t seed, int count = 200);
SuiteResult check_phi_power(std::uint64_t seed, int count = 200);
SuiteResult check_phi_word(std::uint64_t seed, int count = 10000);
SuiteResult check_phi_limit(std::uint64_t seed, int count = 100);

// Surrogates of the asymptotic statements at length T (records must cover T).
SuiteResult check_prime_geodesic_theorem(const std::vector<GeodesicRecord>& records, double T);
SuiteResult check_density(const std::vector<GeodesicRecord>& records, double T);
SuiteResult check_cauchy(const std::vector<GeodesicRecord>& records, double T, double T_small);
SuiteResult check_equidistribution(const std::vector<GeodesicRecord>& records, double T);
SuiteResult check_twisted(const std::vector<GeodesicRecord>& records, double T);
// Relative error at r = 0.25 strictly decreasing over the given lengths.
SuiteResult check_twisted_trend(const std::vector<GeodesicRecord>& records, const std::vector<double>& lengths);

std::vector<SuiteResult> run_verify(const VerifyConfig& config);

// {"suites": [{"suite", "passed", "failed", "details"}...], "passed", "failed"}
std::string verify_report_json(const std::vector<SuiteResult>& results);

}  // namespace rwind
