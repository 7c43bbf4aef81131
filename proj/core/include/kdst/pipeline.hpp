#pragma once

#include "kdst/ids.hpp"
#include "kdst/instance.hpp"
#include "kdst/rational.hpp"

#include <cstdint>
#include <vector>

namespace kdst {

struct SolveConfig {
  std::uint64_t seed = 0;
  int rounds = 0;        // <= 0: default_rounds(instance)
  int max_attempts = 64;
};

// One pass of the inner augmentation loop: which cores were uncovered
// before and after, the LP objective and the lifted cover weight.
struct IterationTrace {
  int level = 0;
  int iteration = 0;  // 1-based within the augmentation call
  int cores_before = 0;
  int cores_after = 0;
  Rational lp_objective;
  Rational lifted_weight;
};

struct LevelTrace {
  int level = 0;
  EdgeSet added_edges;
  Rational added_weight;
  std::vector<IterationTrace> iterations;
};

struct Solution {
  EdgeSet edges;
  Rational weight;
  // (terminal, achieved connectivity), ascending by terminal, recomputed
  // from the edge set rather than trusted from the run.
  std::vector<std::pair<int, int>> certificate;
  std::vector<LevelTrace> trace;
  int rounds_used = 0;
};

// Raises every terminal's connectivity from `level` to level+1 on top of
// the base edges: repeatedly cover the family of tight-set cores via the
// core graph, the strict-core LP and randomized rounding, until no tight
// set remains. The uncovered minimal-core count must at least halve each
// iteration and the loop must finish within ceil(log2 |T|) + 1 iterations;
// violations abort with InternalError since the halving lemma is
// unconditional. Throws InfeasibleError if some terminal cannot reach
// level+1 even with every edge.
EdgeSet augment_connectivity(const Instance& inst, const EdgeSet& base_edges, int level,
                             const SolveConfig& config,
                             std::vector<IterationTrace>* trace = nullptr);

// k successive augmentations starting from the empty edge set. Feasibility
// of the result is certified by independent connectivity checks. Throws
// InfeasibleError before any work if the instance cannot support k
// edge-disjoint paths to every terminal.
Solution solve_kdst(const Instance& inst, const SolveConfig& config);

} // namespace kdst
