#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "vinpos/permutation.hpp"
#include "vinpos/vincular.hpp"

namespace vinpos {

/*
  A closed interval [bottom, top] of a vincular pattern poset, materialized
  with every element and every covering pair.

  The order is graded by length, so elements are stored level by level
  (level r holds the permutations of length |bottom| + r), each level sorted.
  Element indices used by edges() and the cover lists refer to elements().
*/
class Interval {
 public:
  struct Edge {
    std::size_t lower;
    std::size_t upper;
  };

  const Permutation& bottom() const noexcept { return elements_.front(); }
  const Permutation& top() const noexcept { return elements_.back(); }
  const VincularScheme& scheme() const noexcept { return scheme_; }

  std::size_t rank() const noexcept { return level_start_.size() - 2; }
  std::size_t size() const noexcept { return elements_.size(); }

  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  std::span<const Permutation> level(std::size_t r) const;
  std::size_t level_of(std::size_t index) const;

  std::span<const Edge> edges() const noexcept { return edges_; }
  const std::vector<std::size_t>& lower_covers(std::size_t index) const {
    return down_[index];
  }
  const std::vector<std::size_t>& upper_covers(std::size_t index) const {
    return up_[index];
  }

  std::optional<std::size_t> index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return index_of(p).has_value(); }

 private:
  friend class PatternPoset;
  explicit Interval(VincularScheme scheme) : scheme_(std::move(scheme)) {}

  VincularScheme scheme_;
  std::vector<Permutation> elements_;
  std::vector<std::size_t> level_start_;  // rank + 2 entries, last == size()
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> down_;
  std::vector<std::vector<std::size_t>> up_;
};

/*
  The A-vincular pattern poset for one scheme, with the covering relation
  memoized per permutation. Not thread-safe: give each worker its own
  instance.
*/
class PatternPoset {
 public:
  explicit PatternPoset(VincularScheme scheme) : scheme_(std::move(scheme)) {}

  const VincularScheme& scheme() const noexcept { return scheme_; }

  /// covered_by(p, scheme), cached.
  const std::vector<Permutation>& covers(const Permutation& p);

  /// Reflexive-transitive closure of covering.
  bool leq(const Permutation& lower, const Permutation& upper);

  /// Every permutation below `top`, grouped by length (index 0 = length 1).
  std::vector<std::vector<Permutation>> down_set(const Permutation& top);

  /// Every permutation above `bottom` of length at most max_len, grouped by
  /// length (index 0 = |bottom|).
  std::vector<std::vector<Permutation>> up_set(const Permutation& bottom,
                                               std::size_t max_len);

  /// Throws NotComparableError unless bottom <= top.
  Interval interval(const Permutation& bottom, const Permutation& top);

  std::size_t cache_size() const noexcept { return covers_.size(); }
  void clear_cache() { covers_.clear(); }

 private:
  VincularScheme scheme_;
  std::unordered_map<Permutation, std::vector<Permutation>> covers_;
};

bool leq(const Permutation& lower, const Permutation& upper,
         const VincularScheme& scheme);

Interval interval(const Permutation& bottom, const Permutation& top,
                  const VincularScheme& scheme);

std::size_t rank(const Interval& iv);

/// True iff every level has exactly one element.
bool is_chain(const Interval& iv);

/// Level 1 and level rank-1; empty for rank 0.
std::vector<Permutation> atoms(const Interval& iv);
std::vector<Permutation> coatoms(const Interval& iv);

/// Hasse diagram in DOT syntax, edges directed lower -> upper.
std::string export_dot(const Interval& iv);

}  // namespace vinpos
