#include "rwind/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "rwind/arith.hpp"
#include "rwind/rademacher.hpp"
#include "rwind/sample.hpp"
#include "rwind/stats.hpp"
#include "rwind/winding.hpp"

namespace rwind {

namespace {

constexpr std::size_t kMaxDetails = 8;

class Tally {
 public:
  explicit Tally(std::string name) { result_.suite = std::move(name); }

  void check(bool ok, const std::function<std::string()>& describe) {
    if (ok) {
      ++result_.passed;
      return;
    }
    ++result_.failed;
    if (result_.details.size() < kMaxDetails) result_.details.push_back(describe());
  }

  // Runs one case; any library error counts as a failure.
  void run(const std::function<bool()>& body, const std::function<std::string()>& describe) {
    bool ok = false;
    std::string error;
    try {
      ok = body();
    } catch (const std::exception& e) {
      error = e.what();
    }
    check(ok, [&] { return error.empty() ? describe() : describe() + ": " + error; });
  }

  void note(std::string text) { result_.details.push_back(std::move(text)); }

  SuiteResult finish() { return std::move(result_); }

 private:
  SuiteResult result_;
};

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

int sgn(i128 x) { return sign(x); }

// Separate streams per suite so adding cases to one suite leaves the others alone.
Rng suite_rng(std::uint64_t seed, std::uint64_t salt) {
  std::seed_seq seq{seed, salt};
  return Rng(seq);
}

}  // namespace

SuiteResult check_three_way(const std::vector<GeodesicRecord>& records) {
  Tally tally("three-way-agreement");
  for (const auto& rec : records) {
    std::int64_t closed = 0, folded = 0;
    tally.run(
        [&] {
          const Mat2 m = word_to_matrix(rec.word);
          closed = psi(m);
          folded = phi_word(decompose_ts(m)) - kPiOverV * sgn(m.c()) * sgn(m.trace());
          return rec.psi == psi_cf(rec.word) && closed == rec.psi && folded == rec.psi;
        },
        [&] {
          return rec.word.str() + ": cf " + std::to_string(psi_cf(rec.word)) + ", dedekind " + std::to_string(closed) +
                 ", cocycle " + std::to_string(folded);
        });
  }
  tally.note(std::to_string(records.size()) + " classes");
  return tally.finish();
}

SuiteResult check_enumeration_oracle(std::int64_t max_cap) {
  Tally tally("enumeration-oracle");
  for (std::int64_t cap = 3; cap <= max_cap; ++cap) {
    std::size_t fast = 0, slow = 0;
    tally.run(
        [&] {
          EnumerationConfig config;
          config.max_length = kMaxLength;
          config.trace_cap = cap;
          std::vector<CyclicWord> words;
          for (const auto& rec : enumerate(config)) words.push_back(rec.word);
          std::sort(words.begin(), words.end());
          const auto oracle = brute_force_classes(cap);
          fast = words.size();
          slow = oracle.size();
          return words == oracle && (cap != 5 || fast == 5);
        },
        [&] { return "trace cap " + std::to_string(cap) + ": " + std::to_string(fast) + " vs " + std::to_string(slow); });
  }
  return tally.finish();
}

SuiteResult check_winding_index(const std::vector<CyclicWord>& sample, std::uint64_t seed) {
  Tally tally("winding-index");
  double worst = 0.0;
  for (const auto& word : sample) {
    std::int64_t index = 0;
    tally.run(
        [&] {
          const WindingResult r = winding_trace(word_to_matrix(word));
          index = r.index;
          worst = std::max(worst, r.residual);
          return index == psi_cf(word);
        },
        [&] { return word.str() + ": index " + std::to_string(index) + ", psi " + std::to_string(psi_cf(word)); });
  }
  const std::size_t extra = std::min<std::size_t>(50, sample.size());
  for (std::size_t i = 0; i < extra; ++i) {
    const CyclicWord& word = sample[i];
    tally.run([&] { return winding_index(word_to_matrix(word.reversed())) == -psi_cf(word); },
              [&] { return "reversal " + word.str(); });
  }
  Rng rng = suite_rng(seed, 11);
  for (std::size_t i = 0; i < extra; ++i) {
    const CyclicWord& word = sample[i];
    const Mat2 tau = random_sl2(rng, 4, 2);
    tally.run(
        [&] {
          const Mat2 m = word_to_matrix(word);
          return winding_index(tau * m * tau.inverse()) == winding_index(m);
        },
        [&] { return "conjugation of " + word.str() + " by " + tau.str(); });
  }
  const WindingOptions fine{0.025, 0.15};
  for (std::size_t i = 0; i < std::min<std::size_t>(20, sample.size()); ++i) {
    const CyclicWord& word = sample[sample.size() - 1 - i];
    tally.run([&] { return winding_trace(word_to_matrix(word), fine).index == psi_cf(word); },
              [&] { return "refined step " + word.str(); });
  }
  tally.note("max rounding residual " + fmt(worst));
  return tally.finish();
}

SuiteResult check_e2_period(const std::vector<CyclicWord>& sample) {
  Tally tally("e2-period");
  double worst = 0.0;
  for (const auto& word : sample) {
    std::complex<double> p;
    tally.run(
        [&] {
          p = e2_period_complex(word_to_matrix(word));
          const double err = std::max(std::fabs(p.real() - static_cast<double>(psi_cf(word))), std::fabs(p.imag()));
          worst = std::max(worst, err);
          return err < 1e-6;
        },
        [&] { return word.str() + ": period " + fmt(p.real()) + " + " + fmt(p.imag()) + "i, psi " + std::to_string(psi_cf(word)); });
  }
  tally.note("max deviation " + fmt(worst));
  return tally.finish();
}

SuiteResult check_histogram_symmetry(const std::vector<GeodesicRecord>& records, const std::vector<double>& lengths) {
  Tally tally("winding-symmetry");
  for (double T : lengths) {
    const WindingHistogram hist = winding_histogram(records, T);
    std::int64_t sum = 0;
    for (const auto& [n, count] : hist.counts) {
      sum += count;
      const auto it = hist.counts.find(-n);
      const std::int64_t mirror = it == hist.counts.end() ? 0 : it->second;
      tally.check(count == mirror, [&] {
        return "T=" + fmt(T) + " n=" + std::to_string(n) + ": " + std::to_string(count) + " vs " + std::to_string(mirror);
      });
    }
    tally.check(sum == hist.total, [&] { return "T=" + fmt(T) + ": counts do not sum to total"; });
  }
  return tally.finish();
}

SuiteResult check_dedekind_reciprocity(std::uint64_t seed, int count) {
  Tally tally("dedekind-reciprocity");
  Rng rng = suite_rng(seed, 1);
  std::uniform_int_distribution<std::int64_t> dist(1, 1'000'000);
  for (int i = 0; i < count;) {
    const std::int64_t h = dist(rng), k = dist(rng);
    if (gcd128(h, k) != 1) continue;
    ++i;
    tally.run(
        [&] {
          const Rat lhs = dedekind_sum(h, k) + dedekind_sum(k, h);
          const Rat rhs = Rat(-1, 4) + (Rat(h, k) + Rat(k, h) + Rat(1, i128(h) * k)) / Rat(12);
          return lhs == rhs;
        },
        [&] { return "(" + std::to_string(h) + ", " + std::to_string(k) + ")"; });
  }
  return tally.finish();
}

SuiteResult check_omega_cocycle(std::uint64_t seed, int count) {
  Tally tally("omega-cocycle");
  Rng rng = suite_rng(seed, 2);
  for (int i = 0; i < count; ++i) {
    const Mat2 g = random_sl2(rng, 4), h = random_sl2(rng, 4), k = random_sl2(rng, 4);
    tally.run([&] { return omega(g * h, k) + omega(g, h) == omega(g, h * k) + omega(h, k); },
              [&] { return g.str() + " " + h.str() + " " + k.str(); });
  }
  return tally.finish();
}

SuiteResult check_multiplier_law(std::uint64_t seed, int count) {
  Tally tally("multiplier-law");
  Rng rng = suite_rng(seed, 3);
  double worst = 0.0;
  for (int i = 0; i < count; ++i) {
    const Mat2 g = random_sl2(rng), h = random_sl2(rng);
    for (double r : {0.3, 1.0, 2.5}) {
      tally.run(
          [&] {
            const std::complex<double> lhs = chi_r(g * h, r).value;
            const std::complex<double> rhs =
                chi_r(g, r).value * chi_r(h, r).value * std::polar(1.0, 2.0 * std::numbers::pi * r * omega(g, h));
            worst = std::max(worst, std::abs(lhs - rhs));
            return std::abs(lhs - rhs) <= 1e-9;
          },
          [&] { return "r=" + fmt(r) + " " + g.str() + " " + h.str(); });
    }
  }
  tally.note("max deviation " + fmt(worst));
  return tally.finish();
}

SuiteResult check_s_cocycle(std::uint64_t seed, int count) {
  Tally tally("s-symbol-cocycle");
  Rng rng = suite_rng(seed, 4);
  for (int i = 0; i < count; ++i) {
    const Mat2 g = random_sl2(rng), h = random_sl2(rng);
    tally.run([&] { return s_symbol(g * h) - s_symbol(g) - s_symbol(h) == 12 * omega(g, h); },
              [&] { return g.str() + " " + h.str(); });
  }
  return tally.finish();
}

SuiteResult check_psi_inverse(std::uint64_t seed, int count) {
  Tally tally("psi-inverse");
  Rng rng = suite_rng(seed, 5);
  for (int i = 0; i < count; ++i) {
    const Mat2 g = random_hyperbolic(rng);
    tally.run([&] { return psi(g.inverse()) == -psi(g); }, [&] { return g.str(); });
  }
  return tally.finish();
}

SuiteResult check_psi_conjugacy(std::uint64_t seed, int count) {
  Tally tally("psi-conjugacy");
  Rng rng = suite_rng(seed, 6);
  for (int i = 0; i < count; ++i) {
    const Mat2 g = random_hyperbolic(rng);
    const Mat2 tau = random_sl2(rng, 8);
    tally.run([&] { return psi(tau * g * tau.inverse()) == psi(g); }, [&] { return g.str() + " by " + tau.str(); });
  }
  return tally.finish();
}

SuiteResult check_psi_homogeneity(std::uint64_t seed, int count) {
  Tally tally("psi-homogeneity");
  Rng rng = suite_rng(seed, 7);
  for (int i = 0; i < count; ++i) {
    const Mat2 g = random_hyperbolic(rng, 6);
    const std::int64_t base = psi(g);
    for (int n = -3; n <= 3; ++n)
      tally.run([&] { return psi(mat_pow(g, n)) == n * base; }, [&] { return g.str() + "^" + std::to_string(n); });
  }
  return tally.finish();
}

SuiteResult check_phi_power(std::uint64_t seed, int count) {
  Tally tally("phi-power-recursion");
  Rng rng = suite_rng(seed, 8);
  for (int i = 0; i < count; ++i) {
    const Mat2 g = random_hyperbolic(rng, 6);
    for (int n = 1; n <= 6; ++n) {
      tally.run(
          [&] {
            std::int64_t expected = n * phi_closed(g);
            Mat2 power = g;
            for (int k = 1; k < n; ++k) {
              const Mat2 next = power * g;
              expected -= kPiOverV * sgn(g.c()) * sgn(power.c()) * sgn(next.c());
              power = next;
            }
            return phi_closed(power) == expected && phi_power(g, n) == expected;
          },
          [&] { return g.str() + "^" + std::to_string(n); });
    }
  }
  return tally.finish();
}

SuiteResult check_phi_word(std::uint64_t seed, int count) {
  Tally tally("phi-word-vs-closed");
  Rng rng = suite_rng(seed, 9);
  for (int i = 0; i < count; ++i) {
    const GenWord word = random_gen_word(rng, 6);
    tally.run([&] { return phi_word(word) == phi_closed(word_product(word)); },
              [&] { return word_product(word).str(); });
  }
  return tally.finish();
}

SuiteResult check_phi_limit(std::uint64_t seed, int count) {
  Tally tally("phi-limit");
  Rng rng = suite_rng(seed, 10);
  for (int i = 0; i < count; ++i) {
    const Mat2 g = random_hyperbolic(rng);
    const double target = static_cast<double>(psi(g));
    for (int n = 1; n <= 64; ++n)
      tally.run([&] { return std::fabs(static_cast<double>(phi_power(g, n)) / n - target) <= 6.0 / n; },
                [&] { return g.str() + " n=" + std::to_string(n); });
  }
  return tally.finish();
}

SuiteResult check_prime_geodesic_theorem(const std::vector<GeodesicRecord>& records, double T) {
  Tally tally("prime-geodesic-theorem");
  const double ratio = twisted_sum(records, T, 0.0).sum.real() / std::exp(T);
  tally.check(std::fabs(ratio - 1.0) <= 0.10, [&] { return "sum of lengths / e^T = " + fmt(ratio); });
  tally.note("T=" + fmt(T) + " sum/e^T=" + fmt(ratio));
  return tally.finish();
}

SuiteResult check_density(const std::vector<GeodesicRecord>& records, double T) {
  Tally tally("winding-density");
  const auto rows = density_table(winding_histogram(records, T), -3, 3);
  for (const auto& row : rows) {
    if (std::abs(row.n) > 2) continue;
    tally.check(std::fabs(row.ratio - 1.0) <= 0.25, [&] { return "n=" + std::to_string(row.n) + " ratio " + fmt(row.ratio); });
  }
  const double peak = rows[3].empirical;
  tally.check(peak > rows[0].empirical && peak > rows[6].empirical, [&] { return "no peak at n=0"; });
  return tally.finish();
}

SuiteResult check_cauchy(const std::vector<GeodesicRecord>& records, double T, double T_small) {
  Tally tally("cauchy-limit");
  const double ks = cauchy_compare(records, T).ks_statistic;
  const double ks_small = cauchy_compare(records, T_small).ks_statistic;
  tally.check(ks <= 0.10, [&] { return "KS " + fmt(ks) + " at T=" + fmt(T); });
  tally.check(ks < ks_small, [&] { return "KS " + fmt(ks) + " not below " + fmt(ks_small) + " at T=" + fmt(T_small); });
  tally.note("KS " + fmt(ks) + " at T=" + fmt(T) + ", " + fmt(ks_small) + " at T=" + fmt(T_small));
  return tally.finish();
}

SuiteResult check_equidistribution(const std::vector<GeodesicRecord>& records, double T) {
  Tally tally("equidistribution");
  for (std::int64_t q : {2, 3, 5})
    for (const auto& row : equidistribution(records, T, q))
      tally.check(std::fabs(row.density - row.reference) <= 0.10, [&] {
        return "q=" + std::to_string(q) + " a=" + std::to_string(row.residue) + " density " + fmt(row.density);
      });
  return tally.finish();
}

SuiteResult check_twisted(const std::vector<GeodesicRecord>& records, double T) {
  Tally tally("twisted-sum");
  const TwistedSumReport quarter = twisted_sum(records, T, 0.25);
  const double ratio = std::abs(quarter.sum) / quarter.main_term;
  tally.check(ratio >= 0.65 && ratio <= 1.35, [&] { return "r=0.25 ratio " + fmt(ratio); });
  const std::complex<double> s0 = twisted_sum(records, T, 0.0).sum;
  const std::complex<double> s12 = twisted_sum(records, T, 12.0).sum;
  tally.check(std::abs(s12 - s0) <= 1e-9, [&] { return "r=12 differs from r=0 by " + fmt(std::abs(s12 - s0)); });
  tally.note("r=0.25 ratio " + fmt(ratio));
  return tally.finish();
}

SuiteResult check_twisted_trend(const std::vector<GeodesicRecord>& records, const std::vector<double>& lengths) {
  Tally tally("twisted-trend");
  std::vector<double> errors;
  for (double T : lengths) errors.push_back(twisted_sum(records, T, 0.25).relative_error);
  std::string listing;
  for (std::size_t i = 0; i < lengths.size(); ++i) listing += (i ? ", " : "") + ("T=" + fmt(lengths[i]) + ": " + fmt(errors[i]));
  for (std::size_t i = 1; i < errors.size(); ++i)
    tally.check(errors[i] < errors[i - 1], [&] { return "not decreasing at T=" + fmt(lengths[i]); });
  tally.note("relative error " + listing);
  return tally.finish();
}

std::vector<SuiteResult> run_verify(const VerifyConfig& config) {
  if (!(config.max_length <= kMaxLength))
    throw Error(ErrorKind::CapExceeded, "max length " + fmt(config.max_length) + " exceeds " + fmt(kMaxLength));
  EnumerationConfig enum_config;
  enum_config.max_length = config.max_length;
  enum_config.thread_count = config.threads;
  const std::vector<GeodesicRecord> records = enumerate(enum_config);
  const std::vector<CyclicWord> sample = stratified_sample(config.sample, config.seed);

  std::vector<SuiteResult> results;
  results.push_back(check_three_way(records));
  results.push_back(check_enumeration_oracle(30));
  results.push_back(check_winding_index(sample, config.seed));
  results.push_back(check_e2_period(sample));
  std::vector<double> lengths;
  for (double T : {8.0, 10.0, 12.0, 14.0})
    if (T <= config.max_length) lengths.push_back(T);
  if (lengths.empty()) lengths.push_back(config.max_length);
  results.push_back(check_histogram_symmetry(records, lengths));

  results.push_back(check_dedekind_reciprocity(config.seed));
  results.push_back(check_omega_cocycle(config.seed));
  results.push_back(check_multiplier_law(config.seed));
  results.push_back(check_s_cocycle(config.seed));
  results.push_back(check_psi_inverse(config.seed));
  results.push_back(check_psi_conjugacy(config.seed));
  results.push_back(check_psi_homogeneity(config.seed));
  results.push_back(check_phi_power(config.seed));
  results.push_back(check_phi_word(config.seed));
  results.push_back(check_phi_limit(config.seed));

  if (config.max_length >= kStatsLength) {
    const double T = kStatsLength;
    results.push_back(check_prime_geodesic_theorem(records, T));
    results.push_back(check_density(records, T));
    results.push_back(check_cauchy(records, T, 11.0));
    results.push_back(check_equidistribution(records, T));
    results.push_back(check_twisted(records, T));
    results.push_back(check_twisted_trend(records, {11.0, 12.0, 13.0, 14.0}));
  }
  return results;
}

std::string verify_report_json(const std::vector<SuiteResult>& results) {
  nlohmann::ordered_json suites = nlohmann::ordered_json::array();
  std::int64_t passed = 0, failed = 0;
  for (const auto& r : results) {
    suites.push_back({{"suite", r.suite}, {"passed", r.passed}, {"failed", r.failed}, {"details", r.details}});
    passed += r.passed;
    failed += r.failed;
  }
  nlohmann::ordered_json doc = {{"suites", suites}, {"passed", passed}, {"failed", failed}};
  return doc.dump(2) + "\n";
}

}  // namespace rwind
