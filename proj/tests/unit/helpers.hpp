#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "vinpos/permutation.hpp"

namespace testing {

inline std::vector<int> seq(const vinpos::Permutation& p) {
  return {p.values().begin(), p.values().end()};
}

inline vinpos::Permutation P(const char* s) { return vinpos::Permutation::parse(s); }

inline vinpos::Permutation random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i + 1);
  std::shuffle(v.begin(), v.end(), rng);
  return vinpos::Permutation(v);
}

}  // namespace testing
