#include "purisim/rng.hpp"

namespace purisim {

std::uint64_t derive_trial_seed(std::uint64_t master_seed, std::uint64_t index) {
  std::seed_seq seq{
      static_cast<std::uint32_t>(master_seed),
      static_cast<std::uint32_t>(master_seed >> 32),
      static_cast<std::uint32_t>(index),
      static_cast<std::uint32_t>(index >> 32),
  };
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
}

Rng seeded_rng(std::uint64_t seed) { return Rng(seed); }

}  // namespace purisim
