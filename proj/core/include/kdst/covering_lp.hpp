#pragma once

#include "kdst/core_graph.hpp"
#include "kdst/ids.hpp"
#include "kdst/rational.hpp"
#include "kdst/tight.hpp"

#include <optional>
#include <vector>

namespace kdst {

// Nonnegative value per core-graph edge; candidate solution of the
// strict-core covering LP.
struct FractionalSolution {
  std::vector<Rational> values;  // indexed like CoreGraph::edges

  Rational objective(const CoreGraph& core_graph) const;
};

// A strict core whose covering constraint the queried point violates,
// together with the terminal whose scan found it.
struct Violation {
  CutSet cut;
  int terminal = -1;
};

struct OracleVerdict {
  std::optional<Violation> violation;
  bool feasible() const { return !violation.has_value(); }
};

// Min-cut separation oracle for the strict-core covering LP. Scans
// terminals in ascending id; for each terminal whose minimal tight set is
// a core, builds the auxiliary network E(G^F) ∪ E_l ∪ F with capacity 1 on
// base/cover edges and on root->s pairs for terminals s outside the core,
// x_e elsewhere, and compares the min root->t cut against l+1 exactly.
// Returns the first violated inclusion-minimal sink-side cut, which is a
// strict core.
OracleVerdict separation_oracle(const CoreGraph& core_graph, const AugState& state,
                                const MinimalCoreFamily& cores,
                                const FractionalSolution& x);

// Exact optimum of a covering LP given explicitly: minimize weights·x
// subject to sum of each row's variables >= 1 and x >= 0. Solved in exact
// rationals via the dual with Bland's rule, so the result is deterministic.
// Throws InfeasibleError when a row has no variables.
struct CoveringLpResult {
  std::vector<Rational> values;
  Rational objective;
};

CoveringLpResult solve_covering_lp(const std::vector<Rational>& weights,
                                   const std::vector<std::vector<int>>& rows);

// Optimal fractional solution of the strict-core covering LP, found by
// cutting planes around the separation oracle. The working system is
// seeded with the minimal-core constraints (minimal cores are strict
// cores); every oracle call at an LP-optimal point must contribute a new
// row, else an exactness bug is raised.
FractionalSolution solve_strict_core_lp(const CoreGraph& core_graph, const AugState& state,
                                        const MinimalCoreFamily& cores);

// Optimal value of the fractional augmentation relaxation over the
// non-base edges: cutting planes with the plain min-cut oracle (capacity 1
// on base and cover edges, x elsewhere; any root->terminal cut below l+1
// yields a violated tight-set constraint). A lower bound on the exact
// augmentation optimum.
Rational augmentation_lp_lower_bound(const AugState& state);

} // namespace kdst
