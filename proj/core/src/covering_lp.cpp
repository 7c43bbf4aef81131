#include "kdst/covering_lp.hpp"

#include "kdst/errors.hpp"
#include "kdst/flow.hpp"

#include <algorithm>
#include <set>

namespace kdst {

Rational FractionalSolution::objective(const CoreGraph& core_graph) const {
  if (values.size() != core_graph.edges.size()) {
    throw Error("fractional solution does not match the core graph");
  }
  Rational total = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    total += values[i] * core_graph.edges[i].weight;
  }
  return total;
}

CoveringLpResult solve_covering_lp(const std::vector<Rational>& weights,
                                   const std::vector<std::vector<int>>& rows) {
  const int num_vars = static_cast<int>(weights.size());
  const int num_rows = static_cast<int>(rows.size());
  for (const Rational& w : weights) {
    if (w < 0) throw Error("covering LP weights must be nonnegative");
  }
  for (const auto& row : rows) {
    if (row.empty()) throw InfeasibleError("covering constraint with empty support");
    for (int j : row) {
      if (j < 0 || j >= num_vars) throw Error("covering constraint names an unknown variable");
    }
  }

  CoveringLpResult result;
  result.values.assign(num_vars, Rational(0));
  result.objective = 0;
  if (num_rows == 0) return result;

  // Solve the dual packing program, maximize sum(y) subject to
  // A^T y <= w, y >= 0, by primal simplex from the all-slack basis (w >= 0
  // keeps it feasible). Bland's rule picks the lowest eligible index on
  // both sides, so the run is deterministic and never cycles. At optimality
  // the slack columns' reduced costs are the primal covering solution.
  const int cols = num_rows + num_vars;
  std::vector<std::vector<Rational>> tab(num_vars, std::vector<Rational>(cols + 1, Rational(0)));
  for (int i = 0; i < num_rows; ++i) {
    for (int j : rows[i]) tab[j][i] = 1;
  }
  for (int j = 0; j < num_vars; ++j) {
    tab[j][num_rows + j] = 1;
    tab[j][cols] = weights[j];
  }

  // reduced-cost row (z_j - c_j) plus the objective value in the last cell
  std::vector<Rational> reduced(cols + 1, Rational(0));
  for (int i = 0; i < num_rows; ++i) reduced[i] = -1;

  std::vector<int> basis(num_vars);
  for (int j = 0; j < num_vars; ++j) basis[j] = num_rows + j;

  while (true) {
    int enter = -1;
    for (int c = 0; c < cols; ++c) {
      if (reduced[c] < 0) {
        enter = c;
        break;
      }
    }
    if (enter < 0) break;

    int leave = -1;
    Rational best_ratio;
    for (int r = 0; r < num_vars; ++r) {
      if (tab[r][enter] <= 0) continue;
      Rational ratio = tab[r][cols] / tab[r][enter];
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave < 0) {
      // dual unbounded, so the covering program has no feasible point
      throw InfeasibleError("covering LP is infeasible");
    }

    // pivot on (leave, enter)
    Rational pivot = tab[leave][enter];
    for (auto& cell : tab[leave]) cell /= pivot;
    for (int r = 0; r < num_vars; ++r) {
      if (r == leave || tab[r][enter] == 0) continue;
      Rational factor = tab[r][enter];
      for (int c = 0; c <= cols; ++c) tab[r][c] -= factor * tab[leave][c];
    }
    if (reduced[enter] != 0) {
      Rational factor = reduced[enter];
      for (int c = 0; c <= cols; ++c) reduced[c] -= factor * tab[leave][c];
    }
    basis[leave] = enter;
  }

  for (int j = 0; j < num_vars; ++j) result.values[j] = reduced[num_rows + j];
  result.objective = reduced[cols];

  // exactness self-check: the recovered point must be feasible and its
  // value must match the dual optimum
  Rational check = 0;
  for (int j = 0; j < num_vars; ++j) {
    if (result.values[j] < 0) throw InternalError("covering LP produced a negative value");
    check += result.values[j] * weights[j];
  }
  if (check != result.objective) throw InternalError("covering LP duality gap");
  for (const auto& row : rows) {
    Rational sum = 0;
    for (int j : row) sum += result.values[j];
    if (sum < 1) throw InternalError("covering LP returned an infeasible point");
  }
  return result;
}

OracleVerdict separation_oracle(const CoreGraph& core_graph, const AugState& state,
                                const MinimalCoreFamily& cores,
                                const FractionalSolution& x) {
  const Instance& inst = state.instance();
  if (x.values.size() != core_graph.edges.size()) {
    throw Error("fractional solution does not match the core graph");
  }
  for (const Rational& v : x.values) {
    if (v < 0) throw Error("fractional solution has a negative value");
  }

  const int n = inst.vertex_count();
  const int root = inst.root();
  const Rational threshold(state.level() + 1);

  for (int t : inst.terminals().ids()) {
    if (!cores.covered_terminals().contains(t)) continue;
    CutSet core = *cores.core_containing(t);

    // auxiliary network: core-graph edges at x (except root->s pairs for
    // terminals s outside the core, forced to 1), then base and cover
    // edges at 1
    std::vector<Arc> arcs;
    arcs.reserve(core_graph.edges.size() + state.active_edges().size() + inst.terminal_count());
    for (std::size_t i = 0; i < core_graph.edges.size(); ++i) {
      const CoreGraphEdge& e = core_graph.edges[i];
      bool forced = e.tail == root && inst.is_terminal(e.head) && !core.contains(e.head);
      arcs.push_back({e.tail, e.head, forced ? Rational(1) : x.values[i]});
    }
    // A terminal outside the core can be unreachable in the shortcut graph
    // and then has no core-graph pair from the root; the capacity-1 arc is
    // added explicitly so cuts through that terminal still price at l+1.
    for (int s : inst.terminals().ids()) {
      if (core.contains(s) || core_graph.find_edge(root, s) >= 0) continue;
      arcs.push_back({root, s, Rational(1)});
    }
    state.active_edges().for_each([&](int id) {
      const Edge& e = inst.edge(id);
      arcs.push_back({e.tail, e.head, Rational(1)});
    });

    CutResult cut = max_flow_min_cut(n, arcs, root, t);
    if (cut.value < threshold) {
      return OracleVerdict{Violation{std::move(cut.sink_side), t}};
    }
  }
  return OracleVerdict{};
}

namespace {

std::vector<int> entering_core_graph_edges(const CoreGraph& core_graph, const CutSet& cut) {
  std::vector<int> row;
  for (std::size_t i = 0; i < core_graph.edges.size(); ++i) {
    const CoreGraphEdge& e = core_graph.edges[i];
    if (!cut.contains(e.tail) && cut.contains(e.head)) row.push_back(static_cast<int>(i));
  }
  return row;
}

} // namespace

FractionalSolution solve_strict_core_lp(const CoreGraph& core_graph, const AugState& state,
                                        const MinimalCoreFamily& cores) {
  if (cores.empty()) throw Error("strict-core LP needs a nonempty core family");
  const Instance& inst = state.instance();

  std::vector<Rational> weights;
  weights.reserve(core_graph.edges.size());
  for (const CoreGraphEdge& e : core_graph.edges) weights.push_back(e.weight);

  std::vector<std::vector<int>> rows;
  std::set<std::vector<int>> seen;

  // warm start: the minimal cores are strict cores, and their constraints
  // are always part of the system
  for (const auto& entry : cores.entries()) {
    std::vector<int> row = entering_core_graph_edges(core_graph, entry.core);
    if (row.empty()) {
      throw InfeasibleError("a minimal core has no entering core-graph edge");
    }
    if (seen.insert(row).second) rows.push_back(std::move(row));
  }

  // termination certificate: at most 2^|S| * |T| strict-core constraints
  const int steiner = inst.steiner_count();
  const std::uint64_t hard_cap =
      steiner < 40 ? (std::uint64_t{1} << steiner) * inst.terminal_count() + rows.size()
                   : std::uint64_t{1} << 62;

  while (true) {
    CoveringLpResult lp = solve_covering_lp(weights, rows);
    FractionalSolution x{lp.values};
    OracleVerdict verdict = separation_oracle(core_graph, state, cores, x);
    if (verdict.feasible()) return x;

    std::vector<int> row = entering_core_graph_edges(core_graph, verdict.violation->cut);
    if (row.empty()) {
      throw InfeasibleError("a strict core has no entering core-graph edge");
    }
    if (!seen.insert(row).second) {
      throw InternalError("separation oracle repeated a satisfied constraint");
    }
    rows.push_back(std::move(row));
    if (rows.size() > hard_cap) {
      throw InternalError("cutting-plane loop exceeded the strict-core count bound");
    }
  }
}

Rational augmentation_lp_lower_bound(const AugState& state) {
  const Instance& inst = state.instance();
  const int n = inst.vertex_count();
  const int root = inst.root();
  const Rational threshold(state.level() + 1);

  // variables: edges outside base and cover, in ascending id order
  std::vector<int> var_edges;
  for (int id = 0; id < inst.edge_count(); ++id) {
    if (!state.active_edges().contains(id)) var_edges.push_back(id);
  }
  std::vector<Rational> weights;
  weights.reserve(var_edges.size());
  for (int id : var_edges) weights.push_back(inst.edge(id).weight);

  std::vector<std::vector<int>> rows;
  std::set<std::vector<int>> seen;
  const std::uint64_t hard_cap = n < 40 ? (std::uint64_t{1} << n) : (std::uint64_t{1} << 62);

  while (true) {
    CoveringLpResult lp = solve_covering_lp(weights, rows);

    // plain min-cut oracle: capacity 1 on active edges, x on the rest
    std::optional<CutSet> violated;
    for (int t : inst.terminals().ids()) {
      std::vector<Arc> arcs;
      arcs.reserve(var_edges.size() + state.active_edges().size());
      for (std::size_t j = 0; j < var_edges.size(); ++j) {
        const Edge& e = inst.edge(var_edges[j]);
        arcs.push_back({e.tail, e.head, lp.values[j]});
      }
      state.active_edges().for_each([&](int id) {
        const Edge& e = inst.edge(id);
        arcs.push_back({e.tail, e.head, Rational(1)});
      });
      CutResult cut = max_flow_min_cut(n, arcs, root, t);
      if (cut.value < threshold) {
        violated = std::move(cut.sink_side);
        break;
      }
    }
    if (!violated) return lp.objective;

    std::vector<int> row;
    for (std::size_t j = 0; j < var_edges.size(); ++j) {
      const Edge& e = inst.edge(var_edges[j]);
      if (!violated->contains(e.tail) && violated->contains(e.head)) {
        row.push_back(static_cast<int>(j));
      }
    }
    if (row.empty()) {
      throw InfeasibleError("augmentation cannot reach the next level for some terminal");
    }
    if (!seen.insert(row).second) {
      throw InternalError("separation oracle repeated a satisfied constraint");
    }
    rows.push_back(std::move(row));
    if (rows.size() > hard_cap) {
      throw InternalError("cutting-plane loop exceeded the cut-count bound");
    }
  }
}

} // namespace kdst
