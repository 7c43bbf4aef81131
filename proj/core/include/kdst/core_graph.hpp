#pragma once

#include "kdst/ids.hpp"
#include "kdst/instance.hpp"
#include "kdst/rational.hpp"
#include "kdst/tight.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kdst {

// One edge of the weighted base graph the metric completion runs on:
// either an original non-base instance edge, or a zero-weight containment
// shortcut (u,v) recording that every tight set containing v contains u.
struct ShortcutGraphEdge {
  int tail = -1;
  int head = -1;
  Rational weight;       // 0 for shortcuts and cover edges
  int original_id = -1;  // instance edge id, -1 for shortcuts
  // Tie-break id for deterministic shortest paths: original edges keep
  // their instance id, shortcuts follow after them in sorted pair order.
  int order_id = -1;
};

struct ShortcutGraph {
  std::vector<std::pair<int, int>> shortcuts;  // sorted (tail, head) pairs
  std::vector<ShortcutGraphEdge> edges;

  bool has_shortcut(int tail, int head) const;
};

// The containment shortcuts plus the weighted base graph: (u,v) is a
// shortcut iff for every core C the minimum cut separating C ∪ {v} from
// {r,u} in (V, E_l ∪ F) with unit capacities has value >= l+1 (pairs where
// the two sides meet separate nothing and pass vacuously). Weights are 0 on
// cover edges and shortcuts, the original weight on other non-base edges.
// Requires a nonempty core family.
ShortcutGraph build_shortcut_graph(const AugState& state, const MinimalCoreFamily& cores);

// All-pairs shortest paths over a ShortcutGraph. Unreachable pairs stay
// absent; every finite pair records a witness path. Ties break by fewest
// edges, then lexicographically smallest order_id sequence, making lifted
// covers reproducible.
class MetricCompletion {
 public:
  MetricCompletion(int vertex_count) : n_(vertex_count), cells_(static_cast<std::size_t>(vertex_count) * vertex_count) {}

  int vertex_count() const { return n_; }

  const std::optional<Rational>& distance(int u, int v) const { return cells_[index(u, v)].distance; }
  const std::vector<int>& path(int u, int v) const { return cells_[index(u, v)].path; }

  void set(int u, int v, Rational d, std::vector<int> path_edges) {
    auto& c = cells_[index(u, v)];
    c.distance = std::move(d);
    c.path = std::move(path_edges);
  }

 private:
  std::size_t index(int u, int v) const { return static_cast<std::size_t>(u) * n_ + v; }

  struct Cell {
    std::optional<Rational> distance;
    std::vector<int> path;  // indices into ShortcutGraph::edges
  };

  int n_;
  std::vector<Cell> cells_;
};

MetricCompletion metric_completion(const ShortcutGraph& graph, int vertex_count);

struct CoreGraphEdge {
  int tail = -1;
  int head = -1;
  Rational weight;        // metric-completion distance
  std::vector<int> path;  // witness path, indices into shortcut_graph.edges
};

// The pruned metric completion the covering LP runs on. Vertices are the
// instance's; edges are the finite ordered pairs (u != v) that survive
// pruning, in ascending (tail, head) order.
struct CoreGraph {
  const Instance* instance = nullptr;
  ShortcutGraph shortcut_graph;
  std::vector<CoreGraphEdge> edges;
  std::vector<int> edge_index;  // n*n -> index into edges, -1 if absent

  int find_edge(int tail, int head) const;
  Rational weight_of(const std::vector<int>& edge_indices) const;
};

// Removes all out-edges of every vertex u outside Q (the terminals covered
// by the cores) that cannot be separated from some s in Q by a tight set:
// min_cut_between_sets({r,u}, {s}) >= l+1 for that s. The root's out-edges
// are never pruned, since no tight set contains the root.
CoreGraph prune_to_core_graph(const AugState& state, const MinimalCoreFamily& cores,
                              ShortcutGraph graph, const MetricCompletion& completion);

// build_shortcut_graph + metric_completion + prune_to_core_graph.
CoreGraph build_core_graph(const AugState& state, const MinimalCoreFamily& cores);

// Replaces each picked core-graph edge by its witness path and keeps the
// original non-base, non-cover edges: the result covers every core the
// picked set covers, at original weight at most the picked metric weight.
// Throws InternalError if a picked edge has no recorded path.
EdgeSet lift_cover(const AugState& state, const CoreGraph& core_graph,
                   const std::vector<int>& picked_edges);

// Debug dump (pairs, exact weights, witness paths) as a JSON string.
std::string core_graph_to_json(const CoreGraph& core_graph);

} // namespace kdst
