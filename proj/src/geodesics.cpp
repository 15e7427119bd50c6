#include "rwind/geodesics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <set>
#include <thread>
#include <utility>

#include "rwind/arith.hpp"

namespace rwind {

void validate_word(std::span<const std::int64_t> entries) {
  if (entries.empty() || entries.size() % 2 != 0)
    throw Error(ErrorKind::OddLength, "word length " + std::to_string(entries.size()));
  for (auto a : entries)
    if (a < 1) throw Error(ErrorKind::NonPositiveEntry, "entry " + std::to_string(a));
}

namespace {

// True if rotating w left by `shift` gives something lexicographically smaller.
bool rotation_smaller(std::span<const std::int64_t> w, std::size_t shift) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    auto x = w[(i + shift) % n];
    if (x != w[i]) return x < w[i];
  }
  return false;
}

bool is_canonical(std::span<const std::int64_t> w) {
  for (std::size_t s = 2; s < w.size(); s += 2)
    if (rotation_smaller(w, s)) return false;
  return true;
}

}  // namespace

CyclicWord canonical_form(std::span<const std::int64_t> entries) {
  validate_word(entries);
  const std::size_t n = entries.size();
  std::size_t best = 0;
  for (std::size_t s = 2; s < n; s += 2) {
    for (std::size_t i = 0; i < n; ++i) {
      auto x = entries[(i + s) % n];
      auto y = entries[(i + best) % n];
      if (x != y) {
        if (x < y) best = s;
        break;
      }
    }
  }
  std::vector<std::int64_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = entries[(i + best) % n];
  return CyclicWord(std::move(out));
}

CyclicWord CyclicWord::reversed() const {
  std::vector<std::int64_t> rev(entries_.rbegin(), entries_.rend());
  return canonical_form(rev);
}

std::string CyclicWord::str() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out.push_back('-');
    out += std::to_string(entries_[i]);
  }
  return out;
}

bool is_primitive(std::span<const std::int64_t> entries) {
  const std::size_t n = entries.size();
  for (std::size_t p = 2; p < n; p += 2) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = 0; i + p < n && periodic; ++i) periodic = entries[i] == entries[i + p];
    if (periodic) return false;
  }
  return true;
}

Mat2 word_to_matrix(std::span<const std::int64_t> entries) {
  validate_word(entries);
  Mat2 m = Mat2::identity();
  for (std::size_t i = 0; i < entries.size(); i += 2) {
    const i128 a = entries[i], b = entries[i + 1];
    // A_a A_b = (ab+1 a; b 1)
    m = m * Mat2(checked_add(checked_mul(a, b), 1), a, b, 1);
  }
  return m;
}

std::int64_t psi_cf(std::span<const std::int64_t> entries) {
  validate_word(entries);
  std::int64_t s = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) s += (i % 2 == 0) ? entries[i] : -entries[i];
  return s;
}

CyclicWord matrix_to_word(const Mat2& input) {
  const i128 t0 = input.trace();
  if (abs128(t0) <= 2) throw Error(ErrorKind::NotHyperbolic, "trace " + to_string(t0) + " of " + input.str());
  const Mat2 gamma = t0 < 0 ? -input : input;
  const i128 t = gamma.trace();
  const i128 D = checked_sub(checked_mul(t, t), 4);
  const i128 root = isqrt128(D);

  // Complete quotients x_k = (P_k + sqrt D) / Q_k with Q_k | D - P_k^2; the
  // attracting fixed point (a - d + sqrt D) / 2c is the start (t > 0).
  i128 P = checked_sub(gamma.a(), gamma.d());
  i128 Q = checked_mul(2, gamma.c());
  std::vector<i128> quotients;
  std::map<std::pair<i128, i128>, std::size_t> seen;
  std::size_t pre = 0, period = 0;
  for (;;) {
    auto [it, inserted] = seen.emplace(std::make_pair(P, Q), quotients.size());
    if (!inserted) {
      pre = it->second;
      period = quotients.size() - pre;
      break;
    }
    // floor((P + sqrt D)/Q); sqrt D is irrational, so only floor(sqrt D) matters.
    const i128 q = Q > 0 ? floor_div(checked_add(P, root), Q) : floor_div(checked_sub(checked_sub(0, P), checked_add(root, 1)), -Q);
    quotients.push_back(q);
    P = checked_sub(checked_mul(q, Q), P);
    Q = checked_sub(D, checked_mul(P, P)) / Q;
  }

  // The even-length block must start at an even offset: a conjugator made of
  // an odd number of A-factors has determinant -1 and reverses orientation.
  const std::size_t start = pre % 2 == 0 ? pre : pre + 1;
  const std::size_t len = period % 2 == 0 ? period : 2 * period;
  std::vector<std::int64_t> block(len);
  for (std::size_t i = 0; i < len; ++i) block[i] = to_i64(quotients[pre + (start - pre + i) % period]);

  CyclicWord word = canonical_form(block);
  if (word_to_matrix(word).trace() != t)
    throw Error(ErrorKind::NotPrimitive, input.str() + " is a power of the class " + word.str());
  return word;
}

GeodesicRecord make_record(const CyclicWord& word) {
  const i128 t = word_to_matrix(word).trace();
  return {word, to_i64(t), geodesic_length(t), psi_cf(word)};
}

bool record_less(const GeodesicRecord& x, const GeodesicRecord& y) {
  if (x.trace != y.trace) return x.trace < y.trace;
  return x.word < y.word;
}

std::int64_t trace_cap_for_length(double max_length) {
  constexpr double kSlack = 1e-12;
  if (!(max_length > 0.0)) return 2;
  auto length_of = [](std::int64_t t) { return 2.0 * std::acosh(static_cast<double>(t) / 2.0); };
  auto cap = static_cast<std::int64_t>(std::floor(2.0 * std::cosh(max_length / 2.0)));
  while (length_of(cap + 1) <= max_length + kSlack) ++cap;
  while (cap > 2 && length_of(cap) > max_length + kSlack) --cap;
  return std::max<std::int64_t>(cap, 2);
}

namespace {

struct Partial {
  std::int64_t p11, p12, p21, p22;
};

// Right-multiplication by A_b.
inline Partial times_a(const Partial& p, std::int64_t b) {
  return {b * p.p11 + p.p12, p.p11, b * p.p21 + p.p22, p.p21};
}

// Depth-first generation of canonical words. All partial products of
// positive A-factors have non-negative entries, and completing a word can
// only increase the trace, which gives the pruning bounds below.
class WordGenerator {
 public:
  WordGenerator(std::int64_t cap, double max_length, std::vector<GeodesicRecord>& out)
      : cap_(cap), max_length_(max_length), out_(out) {}

  void run_prefix(std::int64_t a1, std::int64_t a2) {
    word_.assign({a1, a2});
    Partial p = times_a(times_a({1, 0, 0, 1}, a1), a2);
    even_node(p);
  }

 private:
  void even_node(const Partial& p) {
    const std::int64_t trace = p.p11 + p.p22;
    if (trace <= cap_ && is_canonical(word_) && is_primitive(word_)) emit(trace);
    // Two more factors cost at least trace(P A_1 A_1).
    if (2 * p.p11 + p.p12 + p.p21 + p.p22 > cap_) return;
    const std::int64_t first = word_.front();
    for (std::int64_t b = first;; ++b) {
      // After P A_b at least one more factor is needed.
      const Partial q = times_a(p, b);
      if (q.p11 + q.p12 + q.p21 > cap_) break;
      word_.push_back(b);
      odd_node(q);
      word_.pop_back();
    }
  }

  void odd_node(const Partial& p) {
    for (std::int64_t b = 1;; ++b) {
      if (b * p.p11 + p.p12 + p.p21 > cap_) break;
      word_.push_back(b);
      even_node(times_a(p, b));
      word_.pop_back();
    }
  }

  void emit(std::int64_t trace) {
    const double length = geodesic_length(trace);
    if (length > max_length_ + 1e-12) return;
    std::int64_t psi = 0;
    for (std::size_t i = 0; i < word_.size(); ++i) psi += (i % 2 == 0) ? word_[i] : -word_[i];
    out_.push_back({canonical_form(word_), trace, length, psi});
  }

  std::int64_t cap_;
  double max_length_;
  std::vector<GeodesicRecord>& out_;
  std::vector<std::int64_t> word_;
};

}  // namespace

std::vector<GeodesicRecord> enumerate(const EnumerationConfig& config) {
  if (config.max_length > kMaxLength)
    throw Error(ErrorKind::CapExceeded, "max length " + std::to_string(config.max_length) + " exceeds 20");
  std::int64_t cap = trace_cap_for_length(config.max_length);
  if (config.trace_cap > 0) cap = std::min(cap, config.trace_cap);
  if (cap < 3) return {};

  // Work items are the first two entries; a1 a2 + 2 is the trace of (a1, a2)
  // and a lower bound for every extension.
  std::vector<std::pair<std::int64_t, std::int64_t>> prefixes;
  for (std::int64_t a1 = 1; a1 + 2 <= cap; ++a1)
    for (std::int64_t a2 = 1; a1 * a2 + 2 <= cap; ++a2) prefixes.emplace_back(a1, a2);

  const unsigned workers = std::max(1u, std::min<unsigned>(config.thread_count, static_cast<unsigned>(prefixes.size())));
  std::vector<std::vector<GeodesicRecord>> parts(workers);
  std::atomic<std::size_t> next{0};
  auto work = [&](unsigned id) {
    WordGenerator gen(cap, config.max_length, parts[id]);
    for (std::size_t i = next++; i < prefixes.size(); i = next++) gen.run_prefix(prefixes[i].first, prefixes[i].second);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < workers; ++id) pool.emplace_back(work, id);
    for (auto& th : pool) th.join();
  }

  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  std::vector<GeodesicRecord> out;
  out.reserve(total);
  for (auto& p : parts) {
    std::move(p.begin(), p.end(), std::back_inserter(out));
    std::vector<GeodesicRecord>().swap(p);
  }
  std::sort(out.begin(), out.end(), record_less);
  return out;
}

void enumerate(const EnumerationConfig& config, const std::function<void(const GeodesicRecord&)>& sink) {
  for (const auto& r : enumerate(config)) sink(r);
}

std::vector<CyclicWord> brute_force_classes(std::int64_t trace_max) {
  if (trace_max > 50) throw Error(ErrorKind::CapExceeded, "brute force limited to trace <= 50");
  std::set<CyclicWord> classes;
  const std::int64_t bound = trace_max * trace_max;
  for (std::int64_t t = 3; t <= trace_max; ++t) {
    for (std::int64_t a = std::max(-bound, t - bound); a <= std::min(bound, t + bound); ++a) {
      const std::int64_t d = t - a;
      const std::int64_t n = a * d - 1;  // = bc, never 0 for |t| > 2
      const std::int64_t mag = n < 0 ? -n : n;
      for (std::int64_t c = 1; c * c <= mag; ++c) {
        if (mag % c != 0) continue;
        const std::int64_t other = mag / c;
        for (std::int64_t cc : {c, other}) {
          if (cc > bound) continue;
          for (std::int64_t sc : {1, -1}) {
            const std::int64_t cv = sc * cc;
            const std::int64_t bv = n / cv;
            if (bv > bound || bv < -bound) continue;
            try {
              classes.insert(matrix_to_word(Mat2(a, bv, cv, d)));
            } catch (const Error& e) {
              if (e.kind() != ErrorKind::NotPrimitive) throw;
            }
          }
          if (other == c) break;
        }
      }
    }
  }
  return {classes.begin(), classes.end()};
}

}  // namespace rwind
