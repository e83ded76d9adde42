#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#ifndef VINPOS_MAX_LENGTH
#define VINPOS_MAX_LENGTH 20
#endif

namespace vinpos {

/// Longest permutation accepted by the API. Enumeration commands use far
/// smaller caps.
inline constexpr std::size_t kMaxPermutationLength = VINPOS_MAX_LENGTH;

/*
  A permutation of {1..n} in one-line notation, n >= 1.

  Values are immutable once constructed; every operation returns a fresh
  permutation. Positions exposed through the public API are 1-based, which
  matches how occurrences are reported; operator[] is the usual 0-based
  element access.
*/
class Permutation {
 public:
  using value_type = int;

  /// Validates that `values` is a permutation of {1..n}.
  explicit Permutation(std::vector<int> values);
  Permutation(std::initializer_list<int> values);

  /// The permutation order-isomorphic to `seq` (entries replaced by ranks).
  static Permutation standardize(std::span<const int> seq);

  /// Parses compact digits ("53142", n <= 9) or comma form ("5,3,1,4,2").
  static Permutation parse(std::string_view text);

  static Permutation identity(std::size_t n);
  static Permutation decreasing(std::size_t n);

  std::size_t size() const noexcept { return values_.size(); }
  int operator[](std::size_t i) const noexcept { return values_[i]; }
  /// 1-based access.
  int at(std::size_t pos) const;
  std::span<const int> values() const noexcept { return values_; }

  /// Compact digits when n <= 9, comma separated otherwise.
  std::string str() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  /// Shorter first, then lexicographic on the one-line form.
  friend bool operator<(const Permutation& a, const Permutation& b) noexcept;

 private:
  struct Trusted {};
  Permutation(std::vector<int> values, Trusted) noexcept
      : values_(std::move(values)) {}

  std::vector<int> values_;

  friend Permutation direct_sum(const Permutation&, const Permutation&);
};

/// Deletes the entry at 1-based `pos` and standardizes what is left.
Permutation remove_entry(const Permutation& p, std::size_t pos);

bool is_monotone(const Permutation& p) noexcept;

/// p followed by q shifted up by |p|.
Permutation direct_sum(const Permutation& p, const Permutation& q);

/// True iff both sequences standardize to the same permutation.
bool order_isomorphic(std::span<const int> s1, std::span<const int> s2);

/// All permutations of length n in lexicographic order.
std::vector<Permutation> all_permutations(std::size_t n);

/// Calls `fn` on every permutation of length n in lexicographic order.
void for_each_permutation(std::size_t n,
                          const std::function<void(const Permutation&)>& fn);

}  // namespace vinpos

template <>
struct std::hash<vinpos::Permutation> {
  std::size_t operator()(const vinpos::Permutation& p) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (int v : p.values()) {
      h ^= static_cast<std::uint64_t>(v);
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};
