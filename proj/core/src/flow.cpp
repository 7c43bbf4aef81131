#include "kdst/flow.hpp"

#include "kdst/errors.hpp"

#include <queue>

namespace kdst {

CapacityMap CapacityMap::unit(const EdgeSet& edges) {
  CapacityMap caps;
  edges.for_each([&](int id) { caps.capacities_.emplace(id, Rational(1)); });
  return caps;
}

void CapacityMap::set(int edge_id, Rational capacity) {
  if (capacity < 0) throw Error("negative capacity");
  capacities_[edge_id] = std::move(capacity);
}

Rational CapacityMap::infinite_sentinel() const {
  Rational total = 0;
  for (const auto& [id, cap] : capacities_) total += cap;
  return total + 1;
}

namespace {

// Residual network with paired arcs: the reverse of arc i sits at i^1.
class ResidualNetwork {
 public:
  ResidualNetwork(int vertex_count, const std::vector<Arc>& arcs)
      : adjacency_(vertex_count) {
    residual_.reserve(arcs.size() * 2);
    heads_.reserve(arcs.size() * 2);
    for (const Arc& arc : arcs) {
      add_pair(arc.tail, arc.head, arc.capacity);
    }
  }

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }

  Rational run_max_flow(int source, int sink) {
    Rational flow = 0;
    while (build_levels(source, sink)) {
      cursor_.assign(adjacency_.size(), 0);
      while (true) {
        Rational pushed = push(source, sink, std::nullopt);
        if (pushed == 0) break;
        flow += pushed;
      }
    }
    return flow;
  }

  // Vertices that can reach `sink` in the residual graph; this is the
  // inclusion-minimal sink-side min cut.
  std::vector<bool> residual_reach_to(int sink) const {
    std::vector<bool> reached(adjacency_.size(), false);
    reached[sink] = true;
    std::queue<int> queue;
    queue.push(sink);
    // arc u->v with residual > 0 lets u reach whatever v reaches; the pair
    // of every arc leaving v is an arc entering v, so adjacency_[v] already
    // indexes the in-arcs
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int idx : adjacency_[v]) {
        int u = heads_[idx];
        if (!reached[u] && residual_[idx ^ 1] > 0) {
          reached[u] = true;
          queue.push(u);
        }
      }
    }
    return reached;
  }

 private:
  void add_pair(int tail, int head, const Rational& capacity) {
    adjacency_[tail].push_back(static_cast<int>(residual_.size()));
    residual_.push_back(capacity);
    heads_.push_back(head);
    adjacency_[head].push_back(static_cast<int>(residual_.size()));
    residual_.push_back(Rational(0));
    heads_.push_back(tail);
  }

  bool build_levels(int source, int sink) {
    level_.assign(adjacency_.size(), -1);
    level_[source] = 0;
    std::queue<int> queue;
    queue.push(source);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      for (int idx : adjacency_[u]) {
        int v = heads_[idx];
        if (level_[v] < 0 && residual_[idx] > 0) {
          level_[v] = level_[u] + 1;
          queue.push(v);
        }
      }
    }
    return level_[sink] >= 0;
  }

  // DFS one augmenting path along level-increasing residual arcs.
  Rational push(int u, int sink, std::optional<Rational> limit) {
    if (u == sink) {
      if (!limit) throw InternalError("flow push reached sink without a bottleneck");
      return *limit;
    }
    for (int& i = cursor_[u]; i < static_cast<int>(adjacency_[u].size()); ++i) {
      int idx = adjacency_[u][i];
      int v = heads_[idx];
      if (residual_[idx] == 0 || level_[v] != level_[u] + 1) continue;
      std::optional<Rational> next_limit = residual_[idx];
      if (limit && *limit < *next_limit) next_limit = limit;
      Rational pushed = push(v, sink, next_limit);
      if (pushed > 0) {
        residual_[idx] -= pushed;
        residual_[idx ^ 1] += pushed;
        return pushed;
      }
    }
    return Rational(0);
  }

  std::vector<std::vector<int>> adjacency_;
  std::vector<Rational> residual_;
  std::vector<int> heads_;
  std::vector<int> level_;
  std::vector<int> cursor_;
};

std::vector<Arc> arcs_from_caps(const Instance& inst, const CapacityMap& caps) {
  std::vector<Arc> arcs;
  arcs.reserve(caps.entries().size());
  for (const auto& [id, cap] : caps.entries()) {
    const Edge& e = inst.edge(id);
    arcs.push_back({e.tail, e.head, cap});
  }
  return arcs;
}

} // namespace

CutResult max_flow_min_cut(int vertex_count, const std::vector<Arc>& arcs,
                           int source, int sink) {
  if (source == sink) throw Error("max flow needs distinct source and sink");
  ResidualNetwork net(vertex_count, arcs);
  CutResult result{net.run_max_flow(source, sink), VertexSet(vertex_count)};
  std::vector<bool> reached = net.residual_reach_to(sink);
  for (int v = 0; v < vertex_count; ++v) {
    if (reached[v]) result.sink_side.add(v);
  }
  return result;
}

CutResult max_flow_min_cut(const Instance& inst, const CapacityMap& caps,
                           int source, int sink) {
  return max_flow_min_cut(inst.vertex_count(), arcs_from_caps(inst, caps), source, sink);
}

CutResult min_cut_between_sets(int vertex_count, const std::vector<Arc>& arcs,
                               const VertexSet& sources, const VertexSet& sinks) {
  if (sources.empty() || sinks.empty()) throw Error("min cut between sets needs nonempty sides");
  if (sources.intersects(sinks)) throw Error("min cut between sets needs disjoint sides");

  Rational big = 1;
  for (const Arc& arc : arcs) big += arc.capacity;

  std::vector<Arc> extended = arcs;
  int super_source = vertex_count;
  int super_sink = vertex_count + 1;
  for (int s : sources.ids()) extended.push_back({super_source, s, big});
  for (int t : sinks.ids()) extended.push_back({t, super_sink, big});

  CutResult inner = max_flow_min_cut(vertex_count + 2, extended, super_source, super_sink);
  CutResult result{std::move(inner.value), VertexSet(vertex_count)};
  for (int v = 0; v < vertex_count; ++v) {
    if (inner.sink_side.contains(v)) result.sink_side.add(v);
  }
  return result;
}

CutResult min_cut_between_sets(const Instance& inst, const CapacityMap& caps,
                               const VertexSet& sources, const VertexSet& sinks) {
  return min_cut_between_sets(inst.vertex_count(), arcs_from_caps(inst, caps), sources, sinks);
}

} // namespace kdst
