#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace kdst {

// Set of ids drawn from a fixed universe 0..universe-1, backed by a bit
// vector. Membership is O(1); canonical order is the lexicographic order of
// the ascending id sequence, which makes serialized sets deterministic.
// The Tag parameter keeps vertex sets and edge sets distinct types.
template <typename Tag>
class IdSet {
 public:
  IdSet() = default;
  explicit IdSet(int universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  static IdSet full(int universe) {
    IdSet s(universe);
    for (int i = 0; i < universe; ++i) s.add(i);
    return s;
  }

  static IdSet of(int universe, std::initializer_list<int> ids) {
    IdSet s(universe);
    for (int id : ids) s.add(id);
    return s;
  }

  int universe() const { return universe_; }

  bool contains(int id) const {
    assert(id >= 0 && id < universe_);
    return (words_[id >> 6] >> (id & 63)) & 1u;
  }

  void add(int id) {
    assert(id >= 0 && id < universe_);
    words_[id >> 6] |= std::uint64_t{1} << (id & 63);
  }

  void remove(int id) {
    assert(id >= 0 && id < universe_);
    words_[id >> 6] &= ~(std::uint64_t{1} << (id & 63));
  }

  int size() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (auto w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  friend bool operator==(const IdSet& a, const IdSet& b) {
    assert(a.universe_ == b.universe_);
    return a.words_ == b.words_;
  }

  bool is_subset_of(const IdSet& other) const {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~other.words_[i]) return false;
    }
    return true;
  }

  bool intersects(const IdSet& other) const {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & other.words_[i]) return true;
    }
    return false;
  }

  IdSet intersection(const IdSet& other) const {
    IdSet out = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= other.words_[i];
    return out;
  }

  IdSet united(const IdSet& other) const {
    IdSet out = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] |= other.words_[i];
    return out;
  }

  IdSet difference(const IdSet& other) const {
    IdSet out = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= ~other.words_[i];
    return out;
  }

  // Ascending ids.
  std::vector<int> ids() const {
    std::vector<int> out;
    out.reserve(16);
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word) {
        int bit = std::countr_zero(word);
        out.push_back(static_cast<int>(w * 64 + bit));
        word &= word - 1;
      }
    }
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word) {
        int bit = std::countr_zero(word);
        f(static_cast<int>(w * 64 + bit));
        word &= word - 1;
      }
    }
  }

  // Lexicographic order of ascending id sequences.
  static bool canonical_less(const IdSet& a, const IdSet& b) {
    auto ia = a.ids();
    auto ib = b.ids();
    return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
  }

 private:
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct VertexTag {};
struct EdgeTag {};

using VertexSet = IdSet<VertexTag>;
using EdgeSet = IdSet<EdgeTag>;

// A cut set is a vertex set U with r not in U and U meeting T. The
// invariants are checked where cut sets are produced, not by the type.
using CutSet = VertexSet;

} // namespace kdst
