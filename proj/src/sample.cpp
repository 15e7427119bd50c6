#include "rwind/sample.hpp"

#include <algorithm>
#include <set>

namespace rwind {

namespace {

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

}  // namespace

GenWord random_gen_word(Rng& rng, int max_length, int max_power) {
  const auto length = uniform(rng, 1, max_length);
  GenWord word;
  for (std::int64_t i = 0; i < length; ++i) {
    std::int64_t p = uniform(rng, 1, max_power);
    if (uniform(rng, 0, 1)) p = -p;
    word.push_back({Generator::T, p});
    if (i + 1 < length || uniform(rng, 0, 1)) word.push_back({Generator::S, uniform(rng, 0, 1) ? 1 : -1});
  }
  return word;
}

Mat2 random_sl2(Rng& rng, int max_length, int max_power) { return word_product(random_gen_word(rng, max_length, max_power)); }

Mat2 random_hyperbolic(Rng& rng, int max_length, int max_power) {
  for (;;) {
    Mat2 m = random_sl2(rng, max_length, max_power);
    if (m.is_hyperbolic()) return m;
  }
}

CyclicWord random_primitive_word(Rng& rng, int max_pairs, std::int64_t max_entry) {
  for (;;) {
    const auto pairs = uniform(rng, 1, max_pairs);
    std::vector<std::int64_t> entries(static_cast<std::size_t>(2 * pairs));
    for (auto& e : entries) e = uniform(rng, 1, max_entry);
    if (is_primitive(entries)) return canonical_form(entries);
  }
}

std::vector<CyclicWord> stratified_sample(std::size_t size, std::uint64_t seed) {
  Rng rng(seed);
  std::set<CyclicWord> seen;
  std::vector<CyclicWord> out;
  auto add = [&](const CyclicWord& w) {
    if (out.size() < size && seen.insert(w).second) out.push_back(w);
  };

  EnumerationConfig small;
  small.max_length = kMaxLength;
  small.trace_cap = 30;
  for (const auto& rec : enumerate(small)) add(rec.word);

  const std::size_t quarter = size / 4;
  std::size_t target = out.size() + quarter;
  while (out.size() < std::min(size, target)) add(random_primitive_word(rng, 2, 9));
  target = out.size() + quarter;
  while (out.size() < std::min(size, target)) add(random_primitive_word(rng, 4, 5));
  while (out.size() < size) {
    std::vector<std::int64_t> entries = random_primitive_word(rng, 2, 6).entries();
    entries[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(entries.size()) - 1))] = uniform(rng, 50, 200);
    if (is_primitive(entries)) add(canonical_form(entries));
  }
  return out;
}

}  // namespace rwind
