#pragma once

// Seeded random generation of group elements and geodesic classes for the
// property suites.

#include <cstdint>
#include <random>
#include <vector>

#include "rwind/geodesics.hpp"
#include "rwind/rademacher.hpp"

namespace rwind {

using Rng = std::mt19937_64;

// Alternating word T^{p1} S T^{p2} S ... with 1 <= length <= max_length
// factors and 1 <= |p_i| <= max_power.
GenWord random_gen_word(Rng& rng, int max_length, int max_power = 3);

// Product of a random generator word.
Mat2 random_sl2(Rng& rng, int max_length = 8, int max_power = 3);

// Random element with |trace| > 2, by rejection.
Mat2 random_hyperbolic(Rng& rng, int max_length = 8, int max_power = 3);

// Random primitive cyclic word with 2..max_pairs pairs and entries in [1, max_entry].
CyclicWord random_primitive_word(Rng& rng, int max_pairs, std::int64_t max_entry);

// Distinct primitive classes in four strata: short words with small entries,
// longer words, words with one entry in [50, 200], and every class of trace
// at most 30. Deterministic in (size, seed).
std::vector<CyclicWord> stratified_sample(std::size_t size, std::uint64_t seed);

}  // namespace rwind
