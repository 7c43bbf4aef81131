#pragma once

#include "kdst/ids.hpp"
#include "kdst/instance.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace kdst {

// State threaded through one connectivity-augmentation call: the level l,
// the base edges E_l (every terminal l-connected in them) and the partial
// cover F accumulated so far, with F disjoint from E_l. Immutable: growing
// the cover produces a new state, which also snapshots the per-terminal
// minimal-tight-set cache.
class AugState {
 public:
  AugState(const Instance& inst, int level, EdgeSet base_edges, EdgeSet cover_edges);

  const Instance& instance() const { return *instance_; }
  int level() const { return level_; }
  const EdgeSet& base_edges() const { return base_; }
  const EdgeSet& cover_edges() const { return cover_; }
  const EdgeSet& active_edges() const { return active_; }  // base ∪ cover

  AugState with_added_cover(const EdgeSet& extra) const;

 private:
  friend std::optional<CutSet> minimal_tight_set(const AugState&, int);

  const Instance* instance_;
  int level_;
  EdgeSet base_;
  EdgeSet cover_;
  EdgeSet active_;

  struct CacheEntry {
    bool computed = false;
    std::optional<CutSet> value;
  };
  mutable std::vector<CacheEntry> cache_;  // indexed by vertex id
};

// The unique inclusion-minimal tight set containing the terminal, i.e. the
// minimal sink-side min cut C_t when the min root->t cut in (V, E_l ∪ F)
// has unit-capacity value exactly l; absent when the terminal is already
// (l+1)-connected. A cut value below l means the state is corrupt and
// raises InternalError. Results are cached per state snapshot.
std::optional<CutSet> minimal_tight_set(const AugState& state, int terminal);

// The inclusion-minimal elements of the tight family, listed as
// (representative terminal, cut) with duplicates collapsed and entries in
// canonical set order. Distinct members are terminal-disjoint.
class MinimalCoreFamily {
 public:
  struct Entry {
    int terminal;  // smallest terminal inside the core
    CutSet core;
  };

  MinimalCoreFamily(std::vector<Entry> entries, VertexSet covered_terminals);

  bool empty() const { return entries_.empty(); }
  int size() const { return static_cast<int>(entries_.size()); }
  const std::vector<Entry>& entries() const { return entries_; }

  // Q: the union of C ∩ T over all members. A terminal t lies in Q exactly
  // when C_t is a member, equivalently when some strict core contains t.
  const VertexSet& covered_terminals() const { return covered_terminals_; }

  // The member containing the terminal, if any.
  std::optional<CutSet> core_containing(int terminal) const;

 private:
  std::vector<Entry> entries_;
  VertexSet covered_terminals_;
};

// Exactly the inclusion-minimal tight sets: every present C_t such that
// C_s = C_t for all terminals s inside it. Empty iff every terminal is
// already (l+1)-connected in E_l ∪ F, which doubles as the augmentation
// loop guard.
MinimalCoreFamily minimal_cores(const AugState& state);

} // namespace kdst
