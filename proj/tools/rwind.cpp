// rwind: Rademacher symbols, prime geodesics and winding statistics on the
// modular surface.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <array>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rwind/error.hpp"
#include "rwind/geodesics.hpp"
#include "rwind/io.hpp"
#include "rwind/rademacher.hpp"
#include "rwind/stats.hpp"
#include "rwind/verify.hpp"
#include "rwind/winding.hpp"

using namespace rwind;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFailure = 2;
constexpr int kExitResource = 3;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Overflow:
    case ErrorKind::CapExceeded:
    case ErrorKind::InsufficientData:
      return kExitResource;
    case ErrorKind::NumericalAmbiguity:
    case ErrorKind::StepTooCoarse:
    case ErrorKind::ResidualTooLarge:
    case ErrorKind::QuadratureFailure:
      return kExitFailure;
    default:
      return kExitUsage;
  }
}

// --threads, then RWIND_THREADS, then the hardware count.
unsigned resolve_threads(unsigned flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("RWIND_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::ParseError, std::string("RWIND_THREADS must be a positive integer, got '") + env + "'");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<GeodesicRecord> load_records(double max_length, unsigned threads) {
  EnumerationConfig config;
  config.max_length = max_length;
  config.thread_count = resolve_threads(threads);
  return enumerate(config);
}

std::vector<std::int64_t> split_ints(const std::string& text, const char* what) {
  std::vector<std::int64_t> out;
  std::string cell;
  std::stringstream ss(text);
  while (std::getline(ss, cell, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(cell, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (cell.empty() || used != cell.size()) throw Error(ErrorKind::ParseError, std::string("bad ") + what + " '" + text + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<std::int64_t> parse_word_arg(const std::string& text) {
  if (text.find(',') != std::string::npos) return split_ints(text, "word");
  return parse_word(text);
}

Mat2 parse_matrix_arg(const std::string& text) {
  const auto v = split_ints(text, "matrix");
  if (v.size() != 4) throw Error(ErrorKind::ParseError, "matrix needs 4 comma-separated entries, got '" + text + "'");
  return Mat2(v[0], v[1], v[2], v[3]);
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::DomainError, "cannot open '" + path + "' for writing");
  return out;
}

void write_plot_csv(const std::string& path, const std::vector<std::array<double, 3>>& rows) {
  std::ofstream out = open_output(path);
  out << "x,empirical,predicted\n";
  for (const auto& r : rows) out << format_real(r[0]) << ',' << format_real(r[1]) << ',' << format_real(r[2]) << '\n';
}

struct Input {
  std::string matrix;
  std::string word;

  void add_to(CLI::App* cmd) {
    auto* m = cmd->add_option("--matrix", matrix, "Entries a,b,c,d of an SL(2,Z) matrix");
    auto* w = cmd->add_option("--word", word, "Cyclic word, e.g. 3-7 or 3,7");
    m->excludes(w);
    w->excludes(m);
  }

  // Returns the matrix and, for word input, the validated entries.
  Mat2 resolve(std::optional<std::vector<std::int64_t>>& entries) const {
    if (!word.empty()) {
      auto v = parse_word_arg(word);
      validate_word(v);
      entries = v;
      return word_to_matrix(v);
    }
    if (matrix.empty()) throw Error(ErrorKind::ParseError, "one of --matrix or --word is required");
    return parse_matrix_arg(matrix);
  }
};

int cmd_enumerate(double max_length, const std::string& format, const std::string& out_path, unsigned threads) {
  const auto records = load_records(max_length, threads);
  auto emit = [&](std::ostream& out) {
    if (format == "json")
      write_json(out, records);
    else
      write_csv(out, records);
  };
  if (out_path.empty()) {
    emit(std::cout);
  } else {
    std::ofstream out = open_output(out_path);
    emit(out);
  }
  std::cerr << records.size() << " classes\n";
  return kExitOk;
}

int cmd_psi(const Input& input, const std::string& method) {
  std::optional<std::vector<std::int64_t>> entries;
  const Mat2 gamma = input.resolve(entries);
  const bool all = method == "all";
  std::vector<std::pair<std::string, std::string>> rows;
  std::vector<double> values;
  auto report = [&](const std::string& name, double value, const std::string& text) {
    rows.emplace_back(name, text);
    values.push_back(value);
  };

  if (all || method == "cf") {
    if (entries) {
      const auto v = psi_cf(*entries);
      report("cf", static_cast<double>(v), std::to_string(v));
    } else if (gamma.is_hyperbolic()) {
      try {
        const auto v = psi_cf(matrix_to_word(gamma));
        report("cf", static_cast<double>(v), std::to_string(v));
      } catch (const Error& e) {
        if (!all || e.kind() != ErrorKind::NotPrimitive) throw;
        std::cerr << "cf: skipped, " << e.what() << '\n';
      }
    } else if (!all) {
      throw Error(ErrorKind::NotHyperbolic, "cf needs a hyperbolic element, got " + gamma.str());
    }
  }
  if (all || method == "dedekind") {
    const auto v = psi(gamma);
    report("dedekind", static_cast<double>(v), std::to_string(v));
  }
  if (all || method == "cocycle") {
    const auto v = phi_word(decompose_ts(gamma)) - kPiOverV * sign(gamma.c()) * sign(gamma.trace());
    report("cocycle", static_cast<double>(v), std::to_string(v));
  }
  const bool hyperbolic = gamma.is_hyperbolic();
  if ((all && hyperbolic) || method == "index") {
    const auto v = winding_index(gamma);
    report("index", static_cast<double>(v), std::to_string(v));
  }
  if ((all && hyperbolic) || method == "period") {
    const double v = e2_period(gamma);
    char text[48];
    std::snprintf(text, sizeof text, "%.9f", std::fabs(v) < 5e-10 ? 0.0 : v);
    report("period", v, text);
  }
  if (all && !hyperbolic) std::cerr << "index, period: skipped, " << gamma.str() << " is not hyperbolic\n";

  for (const auto& [name, text] : rows) std::cout << name << ' ' << text << '\n';
  for (double v : values)
    if (std::fabs(v - values.front()) > 1e-6) {
      std::cerr << "methods disagree\n";
      return kExitFailure;
    }
  return kExitOk;
}

int cmd_index(const Input& input, double max_step) {
  std::optional<std::vector<std::int64_t>> entries;
  const Mat2 gamma = input.resolve(entries);
  WindingOptions options;
  options.max_step = max_step;
  const WindingResult r = winding_trace(gamma, options);
  nlohmann::ordered_json doc = {{"index", r.index}, {"turns", r.turns}, {"residual", r.residual}, {"steps", r.steps}};
  std::cout << doc.dump() << '\n';
  return kExitOk;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw Error(ErrorKind::ParseError, "range must look like -5..5, got '" + text + "'");
  const auto lo = split_ints(text.substr(0, dots), "range");
  const auto hi = split_ints(text.substr(dots + 2), "range");
  if (lo.size() != 1 || hi.size() != 1 || lo[0] > hi[0]) throw Error(ErrorKind::ParseError, "bad range '" + text + "'");
  return {lo[0], hi[0]};
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ':')) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(cell, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (cell.empty() || used != cell.size()) throw Error(ErrorKind::ParseError, "bad grid '" + text + "'");
    parts.push_back(v);
  }
  if (parts.size() == 1) return parts;
  if (parts.size() != 3 || !(parts[2] > 0) || parts[1] < parts[0])
    throw Error(ErrorKind::ParseError, "grid must look like start:stop:step, got '" + text + "'");
  const auto count = static_cast<long long>(std::floor((parts[1] - parts[0]) / parts[2] + 1e-9)) + 1;
  std::vector<double> grid;
  for (long long i = 0; i < count; ++i) {
    // Snap to the step's decimal grid so -0.45 + 9 * 0.05 prints as 0.
    const double r = std::round((parts[0] + static_cast<double>(i) * parts[2]) * 1e12) / 1e12;
    grid.push_back(r == 0.0 ? 0.0 : r);
  }
  return grid;
}

int cmd_stats_density(double T, const std::string& range, unsigned threads, const std::string& csv_out) {
  const auto [lo, hi] = parse_range(range);
  const auto records = load_records(T, threads);
  const WindingHistogram hist = winding_histogram(records, T);
  const auto rows = density_table(hist, lo, hi);
  std::cout << "n,count,empirical,predicted,ratio\n";
  std::vector<std::array<double, 3>> plot;
  for (const auto& row : rows) {
    const auto it = hist.counts.find(row.n);
    std::cout << row.n << ',' << (it == hist.counts.end() ? 0 : it->second) << ',' << format_real(row.empirical) << ','
              << format_real(row.predicted) << ',' << format_real(row.ratio) << '\n';
    plot.push_back({static_cast<double>(row.n), row.empirical, row.predicted});
  }
  if (!csv_out.empty()) write_plot_csv(csv_out, plot);
  return kExitOk;
}

int cmd_stats_cauchy(double T, double scale, unsigned threads, const std::string& csv_out) {
  const auto records = load_records(T, threads);
  const DistributionReport report = cauchy_compare(records, T, scale);
  nlohmann::ordered_json doc = {{"T", T},
                                {"sample_size", report.sample_size},
                                {"scale", report.scale},
                                {"ks_statistic", report.ks_statistic}};
  std::cout << doc.dump(2) << '\n';
  if (!csv_out.empty()) {
    std::vector<std::array<double, 3>> plot;
    for (const auto& s : report.samples) plot.push_back({s.u, s.empirical, s.reference});
    write_plot_csv(csv_out, plot);
  }
  return kExitOk;
}

int cmd_stats_equidist(double T, std::int64_t q, unsigned threads, const std::string& csv_out) {
  const auto records = load_records(T, threads);
  const auto rows = equidistribution(records, T, q);
  std::cout << "residue,count,density,reference\n";
  std::vector<std::array<double, 3>> plot;
  for (const auto& row : rows) {
    std::cout << row.residue << ',' << row.count << ',' << format_real(row.density) << ',' << format_real(row.reference) << '\n';
    plot.push_back({static_cast<double>(row.residue), row.density, row.reference});
  }
  if (!csv_out.empty()) write_plot_csv(csv_out, plot);
  return kExitOk;
}

int cmd_stats_twisted(double T, const std::string& grid_text, unsigned threads, const std::string& csv_out) {
  const auto grid = parse_grid(grid_text);
  const auto records = load_records(T, threads);
  std::cout << "r,sum_re,sum_im,abs_sum,main_term,relative_error,valid\n";
  std::vector<std::array<double, 3>> plot;
  for (double r : grid) {
    const TwistedSumReport rep = twisted_sum(records, T, r);
    auto cell = [](double x) { return std::isfinite(x) ? format_real(x) : std::string(); };
    std::cout << format_real(r) << ',' << format_real(rep.sum.real()) << ',' << format_real(rep.sum.imag()) << ','
              << format_real(std::abs(rep.sum)) << ',' << cell(rep.main_term) << ',' << cell(rep.relative_error) << ','
              << (rep.main_term_valid ? 1 : 0) << '\n';
    plot.push_back({r, std::abs(rep.sum), rep.main_term});
  }
  if (!csv_out.empty()) write_plot_csv(csv_out, plot);
  return kExitOk;
}

int cmd_verify(const VerifyConfig& config) {
  if (!(config.max_length <= kMaxLength)) {
    std::cerr << "verify: --max-length " << config.max_length << " exceeds the cap " << kMaxLength << '\n';
    return kExitUsage;
  }
  const auto start = std::chrono::steady_clock::now();
  const auto results = run_verify(config);
  std::cout << verify_report_json(results);
  bool ok = true;
  for (const auto& r : results) {
    ok = ok && r.ok();
    std::cerr << (r.ok() ? "PASS " : "FAIL ") << r.suite << " (" << r.passed << " passed, " << r.failed << " failed)\n";
  }
  std::cerr << "elapsed " << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << " s\n";
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rademacher symbols, prime geodesics and winding statistics on the modular surface"};
  app.require_subcommand(1);

  unsigned threads = 0;
  auto add_threads = [&](CLI::App* cmd) {
    cmd->add_option("--threads", threads, "Worker threads (default: RWIND_THREADS or hardware)")->check(CLI::PositiveNumber);
  };

  double max_length = 10.0;
  std::string format = "csv", out_path;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List oriented primitive classes up to a length");
  enumerate_cmd->add_option("--max-length", max_length, "Length bound T")->required()->check(CLI::NonNegativeNumber);
  enumerate_cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  enumerate_cmd->add_option("--out", out_path, "Output file (default stdout)");
  add_threads(enumerate_cmd);

  Input input;
  std::string method = "all";
  auto* psi_cmd = app.add_subcommand("psi", "Rademacher symbol by one or all methods");
  input.add_to(psi_cmd);
  psi_cmd->add_option("--method", method, "cf, dedekind, cocycle, index, period or all")
      ->check(CLI::IsMember({"cf", "dedekind", "cocycle", "index", "period", "all"}));

  double max_step = WindingOptions{}.max_step;
  auto* index_cmd = app.add_subcommand("index", "Winding index of the lifted discriminant along the axis");
  input.add_to(index_cmd);
  index_cmd->add_option("--max-step", max_step, "Largest flow-time step")->check(CLI::PositiveNumber);

  double stats_length = 14.0;
  std::string csv_out;
  auto add_stats = [&](CLI::App* cmd) {
    cmd->add_option("--max-length", stats_length, "Length bound T")->check(CLI::NonNegativeNumber);
    cmd->add_option("--csv-out", csv_out, "Write plot data (x,empirical,predicted) to this file");
    add_threads(cmd);
  };
  std::string n_range = "-5..5";
  auto* density_cmd = app.add_subcommand("stats-density", "Winding densities against the predicted law");
  add_stats(density_cmd);
  density_cmd->add_option("--n-range", n_range, "Winding range lo..hi");

  double scale = kCauchyScale;
  auto* cauchy_cmd = app.add_subcommand("stats-cauchy", "KS distance of scale*psi/length to the standard Cauchy law");
  add_stats(cauchy_cmd);
  cauchy_cmd->add_option("--scale", scale, "Normalizing factor (default 3/pi)")->check(CLI::PositiveNumber);

  std::int64_t modulus = 2;
  auto* equidist_cmd = app.add_subcommand("stats-equidist", "Residue-class densities of psi");
  add_stats(equidist_cmd);
  equidist_cmd->add_option("--modulus", modulus, "Modulus q")->check(CLI::PositiveNumber);

  std::string r_grid = "-0.45:0.45:0.05";
  auto* twisted_cmd = app.add_subcommand("stats-twisted", "Twisted length sums against the main term");
  add_stats(twisted_cmd);
  twisted_cmd->add_option("--r-grid", r_grid, "Weights start:stop:step or a single value");

  VerifyConfig verify_config;
  auto* verify_cmd = app.add_subcommand("verify", "Run every property suite; JSON summary on stdout");
  verify_cmd->add_option("--max-length", verify_config.max_length, "Enumeration length (stats suites need 14)")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--sample", verify_config.sample, "Size of the stratified winding sample")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", verify_config.seed, "Random seed");
  add_threads(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*enumerate_cmd) return cmd_enumerate(max_length, format, out_path, threads);
    if (*psi_cmd) return cmd_psi(input, method);
    if (*index_cmd) return cmd_index(input, max_step);
    if (*density_cmd) return cmd_stats_density(stats_length, n_range, threads, csv_out);
    if (*cauchy_cmd) return cmd_stats_cauchy(stats_length, scale, threads, csv_out);
    if (*equidist_cmd) return cmd_stats_equidist(stats_length, modulus, threads, csv_out);
    if (*twisted_cmd) return cmd_stats_twisted(stats_length, r_grid, threads, csv_out);
    if (*verify_cmd) {
      verify_config.threads = resolve_threads(threads);
      return cmd_verify(verify_config);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kExitUsage;
}
