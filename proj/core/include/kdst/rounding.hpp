#pragma once

#include "kdst/core_graph.hpp"
#include "kdst/covering_lp.hpp"
#include "kdst/tight.hpp"

#include <cstdint>
#include <vector>

namespace kdst {

struct RoundingConfig {
  std::uint64_t seed = 0;
  // Sampling rounds per attempt; <= 0 selects default_rounds(instance).
  int rounds = 0;
  // A failed attempt (coverage or weight bound) retries with fresh draws;
  // exceeding the cap aborts loudly instead of looping forever.
  int max_attempts = 64;
};

// ceil(ln(2 * min(2^|S| * |T|, 2^(|V|-1)))): enough rounds that a single
// attempt covers every strict core and meets the weight bound with
// constant probability, without knowing the true family size.
int default_rounds(const Instance& inst);

// Randomized rounding of an oracle-feasible fractional solution into an
// integral strict-core cover: per attempt, the union of `rounds`
// independent samples, each keeping edge e with probability min(1, x_e).
// Accepted only when the separation oracle confirms coverage and the
// weight is at most 2*rounds times the fractional objective. Deterministic
// under a fixed seed. Returns ascending core-graph edge indices.
std::vector<int> round_cover(const FractionalSolution& x, const CoreGraph& core_graph,
                             const AugState& state, const MinimalCoreFamily& cores,
                             const RoundingConfig& config);

} // namespace kdst
