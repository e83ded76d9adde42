#include "vinpos/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace vinpos {

namespace {

void check_length(std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("permutation must have at least one entry");
  }
  if (n > kMaxPermutationLength) {
    throw std::invalid_argument("permutation longer than " +
                                std::to_string(kMaxPermutationLength));
  }
}

std::vector<int> ranks_of(std::span<const int> seq) {
  check_length(seq.size());
  std::vector<std::size_t> order(seq.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return seq[a] < seq[b]; });
  std::vector<int> out(seq.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0 && seq[order[r]] == seq[order[r - 1]]) {
      throw std::invalid_argument("duplicate entry " +
                                  std::to_string(seq[order[r]]));
    }
    out[order[r]] = static_cast<int>(r + 1);
  }
  return out;
}

}  // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  check_length(values_.size());
  std::vector<bool> seen(values_.size() + 1, false);
  for (int v : values_) {
    if (v < 1 || static_cast<std::size_t>(v) > values_.size() || seen[v]) {
      throw std::invalid_argument("not a permutation of 1.." +
                                  std::to_string(values_.size()));
    }
    seen[v] = true;
  }
}

Permutation::Permutation(std::initializer_list<int> values)
    : Permutation(std::vector<int>(values)) {}

Permutation Permutation::standardize(std::span<const int> seq) {
  return Permutation(ranks_of(seq), Trusted{});
}

Permutation Permutation::parse(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("empty permutation string");
  }
  std::vector<int> values;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw std::invalid_argument("bad permutation string '" +
                                    std::string(text) + "'");
      }
      values.push_back(c - '0');
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view field = text.substr(start, end - start);
      int v = 0;
      auto [ptr, ec] =
          std::from_chars(field.data(), field.data() + field.size(), v);
      if (field.empty() || ec != std::errc{} ||
          ptr != field.data() + field.size()) {
        throw std::invalid_argument("bad permutation string '" +
                                    std::string(text) + "'");
      }
      values.push_back(v);
      start = end + 1;
    }
  }
  return Permutation(std::move(values));
}

Permutation Permutation::identity(std::size_t n) {
  check_length(n);
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v), Trusted{});
}

Permutation Permutation::decreasing(std::size_t n) {
  check_length(n);
  std::vector<int> v(n);
  std::iota(v.rbegin(), v.rend(), 1);
  return Permutation(std::move(v), Trusted{});
}

int Permutation::at(std::size_t pos) const {
  if (pos < 1 || pos > values_.size()) {
    throw std::out_of_range("position " + std::to_string(pos));
  }
  return values_[pos - 1];
}

std::string Permutation::str() const {
  std::string out;
  const bool compact = values_.size() <= 9;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(values_[i]);
  }
  return out;
}

bool operator<(const Permutation& a, const Permutation& b) noexcept {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.values_ < b.values_;
}

Permutation remove_entry(const Permutation& p, std::size_t pos) {
  if (p.size() < 2) {
    throw std::invalid_argument("cannot remove an entry from a length-1 permutation");
  }
  if (pos < 1 || pos > p.size()) {
    throw std::invalid_argument("position " + std::to_string(pos) +
                                " out of range 1.." + std::to_string(p.size()));
  }
  const int removed = p[pos - 1];
  std::vector<int> rest;
  rest.reserve(p.size() - 1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i + 1 == pos) continue;
    rest.push_back(p[i] > removed ? p[i] - 1 : p[i]);
  }
  return Permutation(std::move(rest));
}

bool is_monotone(const Permutation& p) noexcept {
  auto v = p.values();
  return std::is_sorted(v.begin(), v.end()) ||
         std::is_sorted(v.begin(), v.end(), std::greater<>{});
}

Permutation direct_sum(const Permutation& p, const Permutation& q) {
  check_length(p.size() + q.size());
  std::vector<int> v(p.values().begin(), p.values().end());
  const int shift = static_cast<int>(p.size());
  for (int x : q.values()) v.push_back(x + shift);
  return Permutation(std::move(v), Permutation::Trusted{});
}

bool order_isomorphic(std::span<const int> s1, std::span<const int> s2) {
  return ranks_of(s1) == ranks_of(s2);
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

void for_each_permutation(std::size_t n,
                          const std::function<void(const Permutation&)>& fn) {
  auto v = Permutation::identity(n);
  std::vector<int> cur(v.values().begin(), v.values().end());
  do {
    fn(Permutation(cur));
  } while (std::next_permutation(cur.begin(), cur.end()));
}

}  // namespace vinpos
