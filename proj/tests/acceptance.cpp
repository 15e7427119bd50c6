// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "rwind/sample.hpp"
#include "rwind/stats.hpp"
#include "rwind/verify.hpp"
#include "rwind/winding.hpp"

using namespace rwind;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("error: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::printf("criterion %2d %s  %s: %s\n", id, o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* pattern, double x) {
  char buf[128];
  std::snprintf(buf, sizeof buf, pattern, x);
  return buf;
}

std::string summary(const SuiteResult& r) {
  std::string s = std::to_string(r.passed) + " passed, " + std::to_string(r.failed) + " failed";
  for (const auto& d : r.details) s += "; " + d;
  return s;
}

}  // namespace

int main() {
  std::printf("acceptance run\n");

  // Shared single-threaded enumeration at T = 14.
  const auto enum_start = Clock::now();
  EnumerationConfig config;
  config.max_length = 14.0;
  config.thread_count = 1;
  const std::vector<GeodesicRecord> records14 = enumerate(config);
  const double enum_seconds = seconds_since(enum_start);

  report(1, "three-way psi agreement, length <= 12", [&] {
    const auto start = Clock::now();
    EnumerationConfig c;
    c.max_length = 12.0;
    c.thread_count = 1;
    const SuiteResult r = check_three_way(enumerate(c));
    const double t = seconds_since(start);
    return Outcome{r.ok() && t < 30.0, summary(r) + fmt(", %.2f s (limit 30 s)", t)};
  });

  const std::vector<CyclicWord> sample = stratified_sample(500, 1);
  std::int64_t max_entry = 0;
  for (const auto& w : sample)
    for (auto e : w.entries()) max_entry = std::max(max_entry, e);

  report(2, "winding index = psi on 500-class sample", [&] {
    const auto start = Clock::now();
    const SuiteResult r = check_winding_index(sample, 1);
    const double t = seconds_since(start);
    const bool ok = r.ok() && sample.size() == 500 && max_entry >= 50 && t < 300.0;
    return Outcome{ok, summary(r) + ", largest entry " + std::to_string(max_entry) + fmt(", %.2f s (limit 300 s)", t)};
  });

  report(3, "E2 period = psi within 1e-6", [&] {
    const double p12 = e2_period(word_to_matrix(std::vector<std::int64_t>{1, 2}));
    const double p37 = e2_period(word_to_matrix(std::vector<std::int64_t>{3, 7}));
    const bool oracle = std::fabs(p12 + 1.0) < 1e-6 && std::fabs(p37 + 4.0) < 1e-6;
    const SuiteResult r = check_e2_period(sample);
    return Outcome{oracle && r.ok(), fmt("(1,2) -> %.12f", p12) + fmt(", (3,7) -> %.12f; ", p37) + summary(r)};
  });

  report(4, "enumeration = brute force for trace caps <= 30", [&] {
    EnumerationConfig c;
    c.max_length = kMaxLength;
    c.trace_cap = 5;
    const auto five = enumerate(c).size();
    const SuiteResult r = check_enumeration_oracle(30);
    return Outcome{r.ok() && five == 5, summary(r) + ", " + std::to_string(five) + " classes at cap 5"};
  });

  report(5, "winding histogram symmetry at T = 8, 10, 12, 14", [&] {
    const SuiteResult r = check_histogram_symmetry(records14, {8.0, 10.0, 12.0, 14.0});
    return Outcome{r.ok(), summary(r)};
  });

  report(6, "prime geodesic theorem at T = 14", [&] {
    const SuiteResult r = check_prime_geodesic_theorem(records14, 14.0);
    const bool ok = r.ok() && enum_seconds < 120.0;
    return Outcome{ok, summary(r) + ", " + std::to_string(records14.size()) + " classes" +
                           fmt(", enumeration %.2f s single-threaded (limit 120 s)", enum_seconds)};
  });

  report(7, "winding density at T = 14", [&] {
    const SuiteResult r = check_density(records14, 14.0);
    std::string rows;
    for (const auto& row : density_table(winding_histogram(records14, 14.0), -3, 3))
      rows += "; n=" + std::to_string(row.n) + fmt(" ratio %.4f", row.ratio);
    return Outcome{r.ok(), summary(r) + rows};
  });

  report(8, "Cauchy limit of (3/pi) psi / length", [&] {
    const SuiteResult r = check_cauchy(records14, 14.0, 11.0);
    return Outcome{r.ok(), summary(r)};
  });

  report(9, "equidistribution mod 2, 3, 5 at T = 14", [&] {
    const SuiteResult r = check_equidistribution(records14, 14.0);
    double worst = 0.0;
    for (std::int64_t q : {2, 3, 5})
      for (const auto& row : equidistribution(records14, 14.0, q)) worst = std::max(worst, std::fabs(row.density - row.reference));
    return Outcome{r.ok(), summary(r) + fmt(", max deviation %.5f", worst)};
  });

  report(10, "twisted prime geodesic theorem at r = 0.25", [&] {
    const SuiteResult band = check_twisted(records14, 14.0);
    const SuiteResult trend = check_twisted_trend(records14, {11.0, 12.0, 13.0, 14.0});
    return Outcome{band.ok() && trend.ok(), "band/periodicity: " + summary(band) + "; trend: " + summary(trend)};
  });

  report(11, "property suites via verify, total < 3 min", [&] {
    const auto start = Clock::now();
    VerifyConfig vc;
    vc.threads = 1;
    const auto results = run_verify(vc);
    const double t = seconds_since(start);
    bool ok = t < 180.0;
    std::string failed;
    std::int64_t cases = 0;
    for (const auto& r : results) {
      cases += r.passed + r.failed;
      if (!r.ok()) {
        ok = false;
        failed += " " + r.suite;
      }
    }
    return Outcome{ok, std::to_string(results.size()) + " suites, " + std::to_string(cases) + " cases" +
                           (failed.empty() ? std::string(", all passed") : ", failing:" + failed) + fmt(", %.2f s (limit 180 s)", t)};
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
