#pragma once

#include "kdst/ids.hpp"
#include "kdst/rational.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace kdst {

struct Edge {
  int id = -1;
  int tail = -1;
  int head = -1;
  Rational weight;
};

// Directed weighted multigraph with a designated root, Steiner nodes and
// sink-only terminals, plus the connectivity target k. Vertex ids are dense
// 0..n-1; edge ids follow input order starting at 0. Immutable after
// construction, so concurrent reads are safe.
class Instance {
 public:
  // Validates every structural invariant: role partition, terminal
  // out-degree 0, nonnegative weights, no self-loops, k >= 1.
  // Throws ParseError on violation (line 0 for programmatic construction).
  Instance(int vertex_count, int root, std::vector<int> terminals,
           std::vector<Edge> edges, int k);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int root() const { return root_; }
  int k() const { return k_; }

  const VertexSet& terminals() const { return terminals_; }
  const VertexSet& steiner_nodes() const { return steiner_; }
  int terminal_count() const { return terminal_count_; }
  int steiner_count() const { return steiner_count_; }

  bool is_terminal(int v) const { return terminals_.contains(v); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_.at(id); }

  EdgeSet all_edges() const { return EdgeSet::full(edge_count()); }
  EdgeSet empty_edge_set() const { return EdgeSet(edge_count()); }
  VertexSet empty_vertex_set() const { return VertexSet(vertex_count_); }

  Rational weight_of(const EdgeSet& edges) const;

 private:
  int vertex_count_ = 0;
  int root_ = -1;
  int k_ = 1;
  int terminal_count_ = 0;
  int steiner_count_ = 0;
  VertexSet terminals_;
  VertexSet steiner_;
  std::vector<Edge> edges_;
};

// Reads the line-oriented instance format (see README): `kdst 1`,
// `nodes <n>`, `root <id>`, `terminals <id>...`, `k <int>` once each and
// `edge <tail> <head> <decimal-weight>` repeated, '#' starting a comment.
// Edge ids are assigned in file order from 0. Throws ParseError with the
// offending line number.
Instance parse_instance(std::istream& in);
Instance parse_instance_text(const std::string& text);

// The edges of F entering U: tail outside U, head inside.
EdgeSet covering_edges(const Instance& inst, const EdgeSet& edge_subset,
                       const VertexSet& cut);

// Maximum number of edge-disjoint root->terminal paths in (V, F). By
// Menger this equals the minimum over cut sets containing the terminal of
// the number of entering edges.
int terminal_connectivity(const Instance& inst, const EdgeSet& edge_subset,
                          int terminal);

// True iff every terminal has connectivity >= k in (V, F).
bool is_feasible_solution(const Instance& inst, const EdgeSet& edge_subset);

} // namespace kdst
