#pragma once

#include <cstdint>

#include "unionbounds/prob_system.hpp"

namespace unionbounds {

// xorshift64* with the standard 12/25/27 shifts and multiplier
// 0x2545F4914F6CDD1D, so generated systems are identical on every platform.
class Xorshift64Star {
 public:
  explicit Xorshift64Star(std::uint64_t seed);

  std::uint64_t next();
  // Uniform in [0, 1), 53 mantissa bits.
  double next_double();

 private:
  std::uint64_t state_;
};

// Deterministic random system: outcome weights are drawn and normalized to a
// total mass drawn in [0.5, 1.0]; memberships are fair coin flips, redrawn
// until every event contains at least one outcome.
// Draw order: total mass, then the outcome weights in index order, then whole
// membership matrices (outcome-major) until one is accepted.
FiniteProbabilitySystem random_system(std::uint64_t seed, int n_events,
                                      int n_outcomes);

}  // namespace unionbounds
