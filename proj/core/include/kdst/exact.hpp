#pragma once

#include "kdst/ids.hpp"
#include "kdst/instance.hpp"
#include "kdst/rational.hpp"
#include "kdst/tight.hpp"

#include <vector>

namespace kdst {

// Brute-force ground truth for small instances. Everything here works from
// first definitions (subset scans of the covering predicate), so it stays
// independent of the solver path it checks. Guards are explicit: exceeding
// them raises LimitError, never silent truncation.

struct EnumeratedSet {
  CutSet set;
  bool tight = false;
  bool minimal = false;
  bool core = false;
  bool strict_core = false;
};

struct EnumeratedFamily {
  std::vector<EnumeratedSet> sets;  // canonical order; all entries tight

  std::vector<CutSet> minimal_sets() const;
  std::vector<CutSet> cores() const;
  std::vector<CutSet> strict_cores() const;
};

struct ExactSolution {
  Rational weight;
  EdgeSet edges;
};

// Minimum-weight feasible edge subset by weight-pruned subset search; ties
// break to the lexicographically smallest edge id sequence. Requires
// |E| <= max_edges; throws InfeasibleError when no subset is feasible.
ExactSolution exact_optimum(const Instance& inst, int max_edges = 24);

// Minimum weight of a non-base edge set raising every terminal to
// connectivity level+1. The state must carry an empty cover. Requires
// |E \ E_l| <= max_edges.
Rational exact_augmentation_optimum(const AugState& state, int max_edges = 24);

// Every cut set entered by exactly `level` base edges and no cover edge,
// with minimal/core/strict-core flags computed by definition. Requires
// |V| <= max_vertices.
EnumeratedFamily enumerate_tight_sets(const AugState& state, int max_vertices = 16);

// The strict-core sublist of enumerate_tight_sets, with the 2^|S| * |T|
// count bound asserted.
std::vector<CutSet> enumerate_strict_cores(const AugState& state, int max_vertices = 16);

} // namespace kdst
