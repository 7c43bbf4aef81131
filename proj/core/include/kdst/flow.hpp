#pragma once

#include "kdst/ids.hpp"
#include "kdst/instance.hpp"
#include "kdst/rational.hpp"

#include <map>
#include <vector>

namespace kdst {

// Edge id -> nonnegative exact capacity. Absent edges are not part of the
// network. The "infinite" sentinel is one more than the sum of all finite
// capacities present: large enough that it never binds in any cut, while
// keeping every intermediate value finite and exact.
class CapacityMap {
 public:
  CapacityMap() = default;

  static CapacityMap unit(const EdgeSet& edges);

  void set(int edge_id, Rational capacity);
  bool contains(int edge_id) const { return capacities_.count(edge_id) != 0; }
  const Rational& at(int edge_id) const { return capacities_.at(edge_id); }
  const std::map<int, Rational>& entries() const { return capacities_; }

  Rational infinite_sentinel() const;

 private:
  std::map<int, Rational> capacities_;
};

// A capacitated arc of an ad-hoc flow network (not tied to instance edge
// ids; callers that need per-edge results keep their own arc order).
struct Arc {
  int tail = -1;
  int head = -1;
  Rational capacity;
};

struct CutResult {
  Rational value;
  // The inclusion-minimal sink-side min cut: the set of vertices that can
  // reach the sink in the final residual graph. Deterministic for a fixed
  // arc order.
  VertexSet sink_side;
};

// Max flow / min cut by shortest-augmenting-path phases (blocking flow),
// exact rational capacities. If the sink is unreachable the value is 0 and
// the cut is the residual-reachability set as usual.
CutResult max_flow_min_cut(int vertex_count, const std::vector<Arc>& arcs,
                           int source, int sink);

CutResult max_flow_min_cut(const Instance& inst, const CapacityMap& caps,
                           int source, int sink);

// Minimum total capacity entering a vertex set W with sinks ⊆ W and
// sources ∩ W = ∅, realized with a fresh super-source/super-sink joined by
// never-binding arcs. The returned cut excludes the fresh vertices.
// Requires the two sets to be disjoint and nonempty.
CutResult min_cut_between_sets(int vertex_count, const std::vector<Arc>& arcs,
                               const VertexSet& sources, const VertexSet& sinks);

CutResult min_cut_between_sets(const Instance& inst, const CapacityMap& caps,
                               const VertexSet& sources, const VertexSet& sinks);

} // namespace kdst
