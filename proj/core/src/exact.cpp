#include "kdst/exact.hpp"

#include "kdst/errors.hpp"

#include <algorithm>
#include <optional>

namespace kdst {

namespace {

std::vector<CutSet> filter_by(const std::vector<EnumeratedSet>& sets,
                              bool EnumeratedSet::*flag) {
  std::vector<CutSet> out;
  for (const auto& s : sets) {
    if (s.*flag) out.push_back(s.set);
  }
  return out;
}

} // namespace

std::vector<CutSet> EnumeratedFamily::minimal_sets() const {
  return filter_by(sets, &EnumeratedSet::minimal);
}

std::vector<CutSet> EnumeratedFamily::cores() const {
  return filter_by(sets, &EnumeratedSet::core);
}

std::vector<CutSet> EnumeratedFamily::strict_cores() const {
  return filter_by(sets, &EnumeratedSet::strict_core);
}

namespace {

// Weight-pruned search over subsets of the candidate edges for the
// cheapest set that, on top of the base, gives every terminal `target`
// edge-disjoint root paths. Feasibility is only re-checked when an edge is
// excluded; including edges never breaks it, so the running "available"
// set stays feasible along every explored branch.
class MinWeightCoverSearch {
 public:
  MinWeightCoverSearch(const Instance& inst, EdgeSet base, std::vector<int> candidates,
                       int target)
      : inst_(inst),
        base_(std::move(base)),
        candidates_(std::move(candidates)),
        target_(target),
        terminals_(inst.terminals().ids()) {}

  std::optional<ExactSolution> run() {
    EdgeSet available = base_;
    for (int id : candidates_) available.add(id);
    if (!feasible(available)) return std::nullopt;
    descend(0, std::move(available), Rational(0));

    ExactSolution out;
    out.weight = *best_weight_;
    out.edges = inst_.empty_edge_set();
    for (int id : best_ids_) out.edges.add(id);
    return out;
  }

 private:
  bool feasible(const EdgeSet& edges) const {
    for (int t : terminals_) {
      if (terminal_connectivity(inst_, edges, t) < target_) return false;
    }
    return true;
  }

  void descend(std::size_t depth, EdgeSet available, const Rational& chosen_weight) {
    if (best_weight_ && chosen_weight > *best_weight_) return;
    if (depth == candidates_.size()) {
      // all candidates decided: chosen == available minus base, feasible by
      // the exclusion-check invariant
      if (!best_weight_ || chosen_weight < *best_weight_ ||
          (chosen_weight == *best_weight_ &&
           std::lexicographical_compare(chosen_.begin(), chosen_.end(),
                                        best_ids_.begin(), best_ids_.end()))) {
        best_weight_ = chosen_weight;
        best_ids_ = chosen_;
      }
      return;
    }

    int id = candidates_[depth];

    // exclude first: maximal removals surface cheap solutions early
    EdgeSet without = available;
    without.remove(id);
    if (feasible(without)) descend(depth + 1, std::move(without), chosen_weight);

    chosen_.push_back(id);
    descend(depth + 1, std::move(available), chosen_weight + inst_.edge(id).weight);
    chosen_.pop_back();
  }

  const Instance& inst_;
  EdgeSet base_;
  std::vector<int> candidates_;
  int target_;
  std::vector<int> terminals_;

  std::optional<Rational> best_weight_;
  std::vector<int> best_ids_;
  std::vector<int> chosen_;
};

} // namespace

ExactSolution exact_optimum(const Instance& inst, int max_edges) {
  if (inst.edge_count() > max_edges) {
    throw LimitError("exact optimum limited to " + std::to_string(max_edges) +
                     " edges, instance has " + std::to_string(inst.edge_count()));
  }
  std::vector<int> candidates(inst.edge_count());
  for (int i = 0; i < inst.edge_count(); ++i) candidates[i] = i;

  MinWeightCoverSearch search(inst, inst.empty_edge_set(), std::move(candidates), inst.k());
  auto result = search.run();
  if (!result) throw InfeasibleError("instance has no feasible solution");
  return *result;
}

Rational exact_augmentation_optimum(const AugState& state, int max_edges) {
  if (!state.cover_edges().empty()) {
    throw Error("exact augmentation optimum expects an empty cover");
  }
  const Instance& inst = state.instance();
  std::vector<int> candidates;
  for (int i = 0; i < inst.edge_count(); ++i) {
    if (!state.base_edges().contains(i)) candidates.push_back(i);
  }
  if (static_cast<int>(candidates.size()) > max_edges) {
    throw LimitError("exact augmentation optimum limited to " + std::to_string(max_edges) +
                     " candidate edges, state has " + std::to_string(candidates.size()));
  }

  MinWeightCoverSearch search(inst, state.base_edges(), std::move(candidates),
                              state.level() + 1);
  auto result = search.run();
  if (!result) throw InfeasibleError("augmentation has no feasible solution");
  return result->weight;
}

EnumeratedFamily enumerate_tight_sets(const AugState& state, int max_vertices) {
  const Instance& inst = state.instance();
  const int n = inst.vertex_count();
  if (n > max_vertices) {
    throw LimitError("tight-set enumeration limited to " + std::to_string(max_vertices) +
                     " vertices, instance has " + std::to_string(n));
  }

  std::vector<int> others;
  for (int v = 0; v < n; ++v) {
    if (v != inst.root()) others.push_back(v);
  }

  std::vector<CutSet> tight;
  const std::uint64_t subsets = std::uint64_t{1} << others.size();
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    CutSet cut(n);
    bool has_terminal = false;
    for (std::size_t i = 0; i < others.size(); ++i) {
      if (mask >> i & 1) {
        cut.add(others[i]);
        if (inst.is_terminal(others[i])) has_terminal = true;
      }
    }
    if (!has_terminal) continue;
    if (covering_edges(inst, state.base_edges(), cut).size() != state.level()) continue;
    if (!covering_edges(inst, state.cover_edges(), cut).empty()) continue;
    tight.push_back(std::move(cut));
  }

  std::sort(tight.begin(), tight.end(), CutSet::canonical_less);

  EnumeratedFamily family;
  family.sets.reserve(tight.size());
  for (const CutSet& cut : tight) family.sets.push_back({cut, true, false, false, false});

  // minimal: no other tight set is a proper subset
  for (auto& entry : family.sets) {
    entry.minimal = true;
    for (const auto& other : family.sets) {
      if (!(other.set == entry.set) && other.set.is_subset_of(entry.set)) {
        entry.minimal = false;
        break;
      }
    }
  }

  // core: contains exactly one minimal member; strict core: additionally
  // shares its terminal set with that member
  for (auto& entry : family.sets) {
    const CutSet* unique_minimal = nullptr;
    int count = 0;
    for (const auto& other : family.sets) {
      if (other.minimal && other.set.is_subset_of(entry.set)) {
        ++count;
        unique_minimal = &other.set;
      }
    }
    entry.core = count == 1;
    if (entry.core) {
      entry.strict_core = entry.set.intersection(inst.terminals()) ==
                          unique_minimal->intersection(inst.terminals());
    }
  }
  return family;
}

std::vector<CutSet> enumerate_strict_cores(const AugState& state, int max_vertices) {
  EnumeratedFamily family = enumerate_tight_sets(state, max_vertices);
  std::vector<CutSet> strict = family.strict_cores();

  const Instance& inst = state.instance();
  // theorem check: at most 2^|S| * |T| strict cores
  if (inst.steiner_count() < 60) {
    std::uint64_t bound = (std::uint64_t{1} << inst.steiner_count()) *
                          static_cast<std::uint64_t>(inst.terminal_count());
    if (strict.size() > bound) {
      throw InternalError("strict-core count exceeds its 2^|S|*|T| bound");
    }
  }
  return strict;
}

} // namespace kdst
