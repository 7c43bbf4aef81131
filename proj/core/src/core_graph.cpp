#include "kdst/core_graph.hpp"

#include "kdst/errors.hpp"
#include "kdst/flow.hpp"

#include <json.hpp>

#include <algorithm>

namespace kdst {

bool ShortcutGraph::has_shortcut(int tail, int head) const {
  return std::binary_search(shortcuts.begin(), shortcuts.end(), std::make_pair(tail, head));
}

namespace {

std::vector<Arc> unit_arcs(const AugState& state) {
  std::vector<Arc> arcs;
  const Instance& inst = state.instance();
  state.active_edges().for_each([&](int id) {
    const Edge& e = inst.edge(id);
    arcs.push_back({e.tail, e.head, Rational(1)});
  });
  return arcs;
}

} // namespace

ShortcutGraph build_shortcut_graph(const AugState& state, const MinimalCoreFamily& cores) {
  if (cores.empty()) throw Error("shortcut graph needs a nonempty core family");
  const Instance& inst = state.instance();
  const int n = inst.vertex_count();
  const int root = inst.root();
  const std::vector<Arc> arcs = unit_arcs(state);

  ShortcutGraph graph;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      // (u,v) is a shortcut iff no tight set contains v without u: for each
      // core C, the cheapest set containing C ∪ {v} and avoiding {root,u}
      // must be entered by at least level+1 edges. Overlapping sides
      // separate nothing and pass vacuously (this also admits every (u,root)
      // pair, as no tight set contains the root).
      bool shortcut = true;
      for (const auto& entry : cores.entries()) {
        VertexSet sources(n);
        sources.add(root);
        sources.add(u);
        VertexSet sinks = entry.core;
        sinks.add(v);
        if (sources.intersects(sinks)) continue;

        CutResult cut = min_cut_between_sets(n, arcs, sources, sinks);
        if (cut.value < state.level()) {
          throw InternalError("corrupt state: separating cut below level");
        }
        if (cut.value == state.level()) {
          shortcut = false;
          break;
        }
      }
      if (shortcut) graph.shortcuts.emplace_back(u, v);
    }
  }

  // weighted base graph: non-base original edges (cover edges at weight 0),
  // then the shortcuts, with tie-break ids in that order
  const int edge_count = inst.edge_count();
  for (int id = 0; id < edge_count; ++id) {
    if (state.base_edges().contains(id)) continue;
    const Edge& e = inst.edge(id);
    ShortcutGraphEdge ge;
    ge.tail = e.tail;
    ge.head = e.head;
    ge.weight = state.cover_edges().contains(id) ? Rational(0) : e.weight;
    ge.original_id = id;
    ge.order_id = id;
    graph.edges.push_back(std::move(ge));
  }
  for (std::size_t i = 0; i < graph.shortcuts.size(); ++i) {
    ShortcutGraphEdge ge;
    ge.tail = graph.shortcuts[i].first;
    ge.head = graph.shortcuts[i].second;
    ge.weight = 0;
    ge.original_id = -1;
    ge.order_id = edge_count + static_cast<int>(i);
    graph.edges.push_back(std::move(ge));
  }
  return graph;
}

namespace {

// Path order used by the metric completion: total weight, then hop count,
// then lexicographic order-id sequence. Additive under concatenation, so
// Floyd-Warshall stays exact, and cycles always lose on hops.
struct PathCost {
  Rational weight;
  std::vector<int> order_ids;

  bool better_than(const PathCost& other) const {
    if (weight != other.weight) return weight < other.weight;
    if (order_ids.size() != other.order_ids.size()) {
      return order_ids.size() < other.order_ids.size();
    }
    return std::lexicographical_compare(order_ids.begin(), order_ids.end(),
                                        other.order_ids.begin(), other.order_ids.end());
  }
};

} // namespace

MetricCompletion metric_completion(const ShortcutGraph& graph, int vertex_count) {
  const int n = vertex_count;
  struct Cell {
    bool reachable = false;
    PathCost cost;
    std::vector<int> path;  // indices into graph.edges
  };
  std::vector<Cell> cells(static_cast<std::size_t>(n) * n);
  auto at = [&](int u, int v) -> Cell& { return cells[static_cast<std::size_t>(u) * n + v]; };

  for (int v = 0; v < n; ++v) {
    Cell& c = at(v, v);
    c.reachable = true;
    c.cost.weight = 0;
  }
  for (std::size_t idx = 0; idx < graph.edges.size(); ++idx) {
    const ShortcutGraphEdge& e = graph.edges[idx];
    if (e.weight < 0) throw Error("metric completion needs nonnegative weights");
    Cell& c = at(e.tail, e.head);
    PathCost cand{e.weight, {e.order_id}};
    if (!c.reachable || cand.better_than(c.cost)) {
      c.reachable = true;
      c.cost = std::move(cand);
      c.path = {static_cast<int>(idx)};
    }
  }

  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      const Cell& left = at(i, k);
      if (!left.reachable) continue;
      for (int j = 0; j < n; ++j) {
        if (j == k || j == i) continue;
        const Cell& right = at(k, j);
        if (!right.reachable) continue;
        PathCost cand;
        cand.weight = left.cost.weight + right.cost.weight;
        cand.order_ids.reserve(left.cost.order_ids.size() + right.cost.order_ids.size());
        cand.order_ids.insert(cand.order_ids.end(), left.cost.order_ids.begin(),
                              left.cost.order_ids.end());
        cand.order_ids.insert(cand.order_ids.end(), right.cost.order_ids.begin(),
                              right.cost.order_ids.end());
        Cell& target = at(i, j);
        if (!target.reachable || cand.better_than(target.cost)) {
          std::vector<int> path;
          path.reserve(left.path.size() + right.path.size());
          path.insert(path.end(), left.path.begin(), left.path.end());
          path.insert(path.end(), right.path.begin(), right.path.end());
          target.reachable = true;
          target.cost = std::move(cand);
          target.path = std::move(path);
        }
      }
    }
  }

  MetricCompletion out(n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      const Cell& c = at(u, v);
      if (c.reachable) out.set(u, v, c.cost.weight, c.path);
    }
  }
  return out;
}

int CoreGraph::find_edge(int tail, int head) const {
  if (!instance) return -1;
  const int n = instance->vertex_count();
  return edge_index[static_cast<std::size_t>(tail) * n + head];
}

Rational CoreGraph::weight_of(const std::vector<int>& edge_indices) const {
  Rational total = 0;
  for (int idx : edge_indices) total += edges.at(idx).weight;
  return total;
}

CoreGraph prune_to_core_graph(const AugState& state, const MinimalCoreFamily& cores,
                              ShortcutGraph graph, const MetricCompletion& completion) {
  const Instance& inst = state.instance();
  const int n = inst.vertex_count();
  const int root = inst.root();
  const std::vector<Arc> arcs = unit_arcs(state);
  const VertexSet& covered = cores.covered_terminals();

  // u loses its out-edges when some covered terminal s cannot be separated
  // from u by any tight set
  std::vector<bool> pruned(n, false);
  for (int u = 0; u < n; ++u) {
    if (covered.contains(u)) continue;
    for (int s : covered.ids()) {
      VertexSet sources(n);
      sources.add(root);
      sources.add(u);
      VertexSet sinks(n);
      sinks.add(s);
      CutResult cut = min_cut_between_sets(n, arcs, sources, sinks);
      if (cut.value < state.level()) {
        throw InternalError("corrupt state: separating cut below level");
      }
      if (cut.value > state.level()) {
        pruned[u] = true;
        break;
      }
    }
  }
  if (pruned[root]) {
    throw InternalError("pruning removed the root's out-edges");
  }

  CoreGraph core;
  core.instance = &inst;
  core.shortcut_graph = std::move(graph);
  core.edge_index.assign(static_cast<std::size_t>(n) * n, -1);
  for (int u = 0; u < n; ++u) {
    if (pruned[u]) continue;
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      const auto& dist = completion.distance(u, v);
      if (!dist) continue;
      core.edge_index[static_cast<std::size_t>(u) * n + v] =
          static_cast<int>(core.edges.size());
      CoreGraphEdge edge;
      edge.tail = u;
      edge.head = v;
      edge.weight = *dist;
      edge.path = completion.path(u, v);
      core.edges.push_back(std::move(edge));
    }
  }
  return core;
}

CoreGraph build_core_graph(const AugState& state, const MinimalCoreFamily& cores) {
  ShortcutGraph graph = build_shortcut_graph(state, cores);
  MetricCompletion completion = metric_completion(graph, state.instance().vertex_count());
  return prune_to_core_graph(state, cores, std::move(graph), completion);
}

EdgeSet lift_cover(const AugState& state, const CoreGraph& core_graph,
                   const std::vector<int>& picked_edges) {
  const Instance& inst = state.instance();
  EdgeSet lifted = inst.empty_edge_set();
  for (int idx : picked_edges) {
    const CoreGraphEdge& edge = core_graph.edges.at(idx);
    if (edge.path.empty()) {
      throw InternalError("core-graph edge without a recorded path");
    }
    for (int step : edge.path) {
      const ShortcutGraphEdge& ge = core_graph.shortcut_graph.edges.at(step);
      if (ge.original_id >= 0 && !state.cover_edges().contains(ge.original_id)) {
        lifted.add(ge.original_id);
      }
    }
  }
  return lifted;
}

std::string core_graph_to_json(const CoreGraph& core_graph) {
  nlohmann::json out;
  out["vertices"] = core_graph.instance ? core_graph.instance->vertex_count() : 0;
  out["shortcuts"] = nlohmann::json::array();
  for (const auto& [u, v] : core_graph.shortcut_graph.shortcuts) {
    out["shortcuts"].push_back({{"tail", u}, {"head", v}});
  }
  out["edges"] = nlohmann::json::array();
  for (const CoreGraphEdge& edge : core_graph.edges) {
    nlohmann::json path = nlohmann::json::array();
    for (int step : edge.path) {
      const ShortcutGraphEdge& ge = core_graph.shortcut_graph.edges.at(step);
      nlohmann::json item{{"tail", ge.tail}, {"head", ge.head}};
      if (ge.original_id >= 0) {
        item["edge"] = ge.original_id;
      } else {
        item["edge"] = nullptr;
      }
      path.push_back(std::move(item));
    }
    out["edges"].push_back({{"tail", edge.tail},
                            {"head", edge.head},
                            {"weight_num", edge.weight.get_num().get_str()},
                            {"weight_den", edge.weight.get_den().get_str()},
                            {"path", std::move(path)}});
  }
  return out.dump(2);
}

} // namespace kdst
