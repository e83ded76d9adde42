#include "vinpos/poset.hpp"

#include <algorithm>
#include <sstream>

#include "vinpos/errors.hpp"

namespace vinpos {

namespace {

void sort_unique(std::vector<Permutation>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool sorted_contains(const std::vector<Permutation>& v, const Permutation& p) {
  return std::binary_search(v.begin(), v.end(), p);
}

}  // namespace

std::span<const Permutation> Interval::level(std::size_t r) const {
  if (r > rank()) return {};
  return std::span<const Permutation>(elements_).subspan(
      level_start_[r], level_start_[r + 1] - level_start_[r]);
}

std::size_t Interval::level_of(std::size_t index) const {
  auto it = std::upper_bound(level_start_.begin(), level_start_.end(), index);
  return static_cast<std::size_t>(it - level_start_.begin()) - 1;
}

std::optional<std::size_t> Interval::index_of(const Permutation& p) const {
  if (p.size() < bottom().size() || p.size() > top().size()) return std::nullopt;
  const std::size_t r = p.size() - bottom().size();
  auto first = elements_.begin() + static_cast<std::ptrdiff_t>(level_start_[r]);
  auto last = elements_.begin() + static_cast<std::ptrdiff_t>(level_start_[r + 1]);
  auto it = std::lower_bound(first, last, p);
  if (it == last || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

const std::vector<Permutation>& PatternPoset::covers(const Permutation& p) {
  auto it = covers_.find(p);
  if (it == covers_.end()) {
    it = covers_.emplace(p, covered_by(p, scheme_)).first;
  }
  return it->second;
}

bool PatternPoset::leq(const Permutation& lower, const Permutation& upper) {
  if (lower.size() > upper.size()) return false;
  if (lower.size() == upper.size()) return lower == upper;
  std::vector<Permutation> frontier{upper};
  while (frontier.front().size() > lower.size() + 1) {
    std::vector<Permutation> next;
    for (const auto& p : frontier) {
      const auto& c = covers(p);
      next.insert(next.end(), c.begin(), c.end());
    }
    sort_unique(next);
    if (next.empty()) return false;
    frontier = std::move(next);
  }
  for (const auto& p : frontier) {
    if (sorted_contains(covers(p), lower)) return true;
  }
  return false;
}

std::vector<std::vector<Permutation>> PatternPoset::down_set(const Permutation& top) {
  std::vector<std::vector<Permutation>> by_length(top.size());
  by_length.back() = {top};
  for (std::size_t len = top.size(); len > 1; --len) {
    auto& below = by_length[len - 2];
    for (const auto& p : by_length[len - 1]) {
      const auto& c = covers(p);
      below.insert(below.end(), c.begin(), c.end());
    }
    sort_unique(below);
  }
  return by_length;
}

std::vector<std::vector<Permutation>> PatternPoset::up_set(const Permutation& bottom,
                                                          std::size_t max_len) {
  std::vector<std::vector<Permutation>> by_length{{bottom}};
  for (std::size_t len = bottom.size() + 1; len <= max_len; ++len) {
    // Anything covering rho is rho with one entry inserted.
    std::vector<Permutation> candidates;
    for (const auto& rho : by_length.back()) {
      for (std::size_t at = 0; at < len; ++at) {
        for (int value = 1; value <= static_cast<int>(len); ++value) {
          std::vector<int> v;
          v.reserve(len);
          for (std::size_t i = 0; i < rho.size(); ++i) {
            if (i == at) v.push_back(value);
            v.push_back(rho[i] >= value ? rho[i] + 1 : rho[i]);
          }
          if (at == rho.size()) v.push_back(value);
          candidates.emplace_back(std::move(v));
        }
      }
    }
    sort_unique(candidates);
    std::vector<Permutation> level;
    for (auto& tau : candidates) {
      const auto& c = covers(tau);
      if (std::any_of(c.begin(), c.end(), [&](const Permutation& q) {
            return sorted_contains(by_length.back(), q);
          })) {
        level.push_back(std::move(tau));
      }
    }
    if (level.empty()) break;
    by_length.push_back(std::move(level));
  }
  return by_length;
}

Interval PatternPoset::interval(const Permutation& bottom, const Permutation& top) {
  auto not_comparable = [&] {
    return NotComparableError(bottom.str() + " is not below " + top.str() + " under " +
                              scheme_.fingerprint());
  };
  if (bottom.size() > top.size()) throw not_comparable();
  const std::size_t rk = top.size() - bottom.size();

  // Downward closure from top, level by level.
  std::vector<std::vector<Permutation>> down(rk + 1);
  down[rk] = {top};
  for (std::size_t r = rk; r > 0; --r) {
    for (const auto& p : down[r]) {
      const auto& c = covers(p);
      down[r - 1].insert(down[r - 1].end(), c.begin(), c.end());
    }
    sort_unique(down[r - 1]);
  }
  if (!sorted_contains(down[0], bottom)) throw not_comparable();

  // Keep what lies above bottom.
  std::vector<std::vector<Permutation>> kept(rk + 1);
  kept[0] = {bottom};
  for (std::size_t r = 1; r <= rk; ++r) {
    for (const auto& p : down[r]) {
      const auto& c = covers(p);
      if (std::any_of(c.begin(), c.end(),
                      [&](const Permutation& q) { return sorted_contains(kept[r - 1], q); })) {
        kept[r].push_back(p);
      }
    }
  }

  Interval iv(scheme_);
  for (auto& level : kept) {
    iv.level_start_.push_back(iv.elements_.size());
    iv.elements_.insert(iv.elements_.end(), level.begin(), level.end());
  }
  iv.level_start_.push_back(iv.elements_.size());
  iv.down_.resize(iv.elements_.size());
  iv.up_.resize(iv.elements_.size());
  for (std::size_t r = 1; r <= rk; ++r) {
    for (std::size_t u = iv.level_start_[r]; u < iv.level_start_[r + 1]; ++u) {
      for (const auto& q : covers(iv.elements_[u])) {
        if (auto l = iv.index_of(q)) {
          iv.edges_.push_back({*l, u});
          iv.down_[u].push_back(*l);
          iv.up_[*l].push_back(u);
        }
      }
    }
  }
  for (auto& ups : iv.up_) std::sort(ups.begin(), ups.end());
  return iv;
}

bool leq(const Permutation& lower, const Permutation& upper,
         const VincularScheme& scheme) {
  PatternPoset poset(scheme);
  return poset.leq(lower, upper);
}

Interval interval(const Permutation& bottom, const Permutation& top,
                  const VincularScheme& scheme) {
  PatternPoset poset(scheme);
  return poset.interval(bottom, top);
}

std::size_t rank(const Interval& iv) { return iv.rank(); }

bool is_chain(const Interval& iv) {
  for (std::size_t r = 0; r <= iv.rank(); ++r) {
    if (iv.level(r).size() != 1) return false;
  }
  return true;
}

std::vector<Permutation> atoms(const Interval& iv) {
  if (iv.rank() == 0) return {};
  auto l = iv.level(1);
  return {l.begin(), l.end()};
}

std::vector<Permutation> coatoms(const Interval& iv) {
  if (iv.rank() == 0) return {};
  auto l = iv.level(iv.rank() - 1);
  return {l.begin(), l.end()};
}

std::string export_dot(const Interval& iv) {
  std::ostringstream out;
  out << "digraph interval {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=plaintext];\n";
  for (std::size_t i = 0; i < iv.size(); ++i) {
    out << "  n" << i << " [label=\"" << iv.elements()[i].str() << "\"];\n";
  }
  for (std::size_t r = 0; r <= iv.rank(); ++r) {
    out << "  { rank=same;";
    auto level = iv.level(r);
    const std::size_t first = *iv.index_of(level.front());
    for (std::size_t i = 0; i < level.size(); ++i) out << " n" << first + i << ";";
    out << " }\n";
  }
  for (const auto& e : iv.edges()) {
    out << "  n" << e.lower << " -> n" << e.upper << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace vinpos
