#pragma once

#include <cstdint>
#include <random>

namespace purisim {

using Rng = std::mt19937_64;

// Derives the seed for trial `index` from the master seed. Uses std::seed_seq,
// whose output is fully specified by the standard, so trial i's stream does
// not depend on the trial count or on execution order.
std::uint64_t derive_trial_seed(std::uint64_t master_seed, std::uint64_t index);

Rng seeded_rng(std::uint64_t seed);

}  // namespace purisim
