#include "kdst/tight.hpp"

#include "kdst/errors.hpp"
#include "kdst/flow.hpp"

#include <algorithm>

namespace kdst {

AugState::AugState(const Instance& inst, int level, EdgeSet base_edges, EdgeSet cover_edges)
    : instance_(&inst),
      level_(level),
      base_(std::move(base_edges)),
      cover_(std::move(cover_edges)),
      active_(base_.united(cover_)),
      cache_(inst.vertex_count()) {
  if (level_ < 0) throw Error("augmentation level must be nonnegative");
  if (base_.intersects(cover_)) throw Error("cover edges must be disjoint from base edges");
}

AugState AugState::with_added_cover(const EdgeSet& extra) const {
  return AugState(*instance_, level_, base_, cover_.united(extra));
}

std::optional<CutSet> minimal_tight_set(const AugState& state, int terminal) {
  const Instance& inst = state.instance();
  if (terminal < 0 || terminal >= inst.vertex_count() || !inst.is_terminal(terminal)) {
    throw Error("unknown terminal id " + std::to_string(terminal));
  }

  auto& entry = state.cache_[terminal];
  if (entry.computed) return entry.value;

  CutResult cut = max_flow_min_cut(inst, CapacityMap::unit(state.active_edges()),
                                   inst.root(), terminal);
  if (cut.value < state.level()) {
    throw InternalError("corrupt state: terminal " + std::to_string(terminal) +
                        " has connectivity below level " + std::to_string(state.level()));
  }

  entry.computed = true;
  if (cut.value == state.level()) entry.value = std::move(cut.sink_side);
  return entry.value;
}

MinimalCoreFamily::MinimalCoreFamily(std::vector<Entry> entries, VertexSet covered_terminals)
    : entries_(std::move(entries)), covered_terminals_(std::move(covered_terminals)) {}

std::optional<CutSet> MinimalCoreFamily::core_containing(int terminal) const {
  for (const Entry& entry : entries_) {
    if (entry.core.contains(terminal)) return entry.core;
  }
  return std::nullopt;
}

MinimalCoreFamily minimal_cores(const AugState& state) {
  const Instance& inst = state.instance();
  std::vector<MinimalCoreFamily::Entry> entries;
  VertexSet covered(inst.vertex_count());

  for (int t : inst.terminals().ids()) {
    if (covered.contains(t)) continue;
    auto ct = minimal_tight_set(state, t);
    if (!ct) continue;

    // C_t is inclusion-minimal in the family iff every terminal inside it
    // has the same minimal tight set
    bool is_minimal_member = true;
    VertexSet member_terminals = ct->intersection(inst.terminals());
    for (int s : member_terminals.ids()) {
      if (s == t) continue;
      auto cs = minimal_tight_set(state, s);
      if (!cs || !(*cs == *ct)) {
        is_minimal_member = false;
        break;
      }
    }
    if (!is_minimal_member) continue;

    if (member_terminals.intersects(covered)) {
      throw InternalError("minimal cores are not terminal-disjoint");
    }
    entries.push_back({t, *ct});
    covered = covered.united(member_terminals);
  }

  std::sort(entries.begin(), entries.end(),
            [](const MinimalCoreFamily::Entry& a, const MinimalCoreFamily::Entry& b) {
              return CutSet::canonical_less(a.core, b.core);
            });
  return MinimalCoreFamily(std::move(entries), std::move(covered));
}

} // namespace kdst
