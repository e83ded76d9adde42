#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "vinpos/cli/records.hpp"
#include "vinpos/mobius.hpp"

namespace vinpos::cli {

/// Default ceiling on enumerated permutation lengths.
inline constexpr std::size_t kEnumerationCap = 8;

/*
  Sweeps fan out over target permutations with one PatternPoset per worker
  and write results into per-target slots, so every report is identical to
  a sequential run regardless of `jobs`.
*/

struct TheoremMismatch {
  Permutation sigma;
  Permutation tau;
  CaseLabel label;
  std::int64_t closed_form;
  std::int64_t brute_force;
};

struct TheoremReport {
  std::size_t max_len = 0;
  std::size_t targets = 0;  // tau values visited
  std::size_t checked = 0;  // (sigma, tau) pairs with one occurrence
  std::size_t matched = 0;
  std::size_t direction_disagreements = 0;
  std::map<CaseLabel, std::size_t> by_case;
  std::vector<TheoremMismatch> mismatches;
};

/// Every sigma <= tau, |tau| <= max_len, with exactly one quasi-consecutive
/// occurrence: closed form against the brute-force oracle on interval(sigma,
/// tau), which is also evaluated in both directions.
TheoremReport verify_theorem(std::size_t max_len, unsigned jobs = 1);

struct SurveySummary {
  std::map<std::int64_t, std::size_t> distribution;
  std::int64_t max_abs = 0;
  std::optional<std::string> witness;  // first tau attaining max_abs
};

/// Every tau with |sigma| < |tau| <= max_len and sigma <= tau, in length
/// then lexicographic order, skipping the tau strings listed in `skip`.
std::vector<SurveyRecord> survey(const Permutation& sigma, std::size_t max_len,
                                 const VincularScheme& scheme,
                                 const std::set<std::string>& skip = {},
                                 unsigned jobs = 1);

SurveySummary summarize(const std::vector<SurveyRecord>& records);

struct DirectSumCase {
  Permutation sigma;
  std::size_t copies;
  Permutation tau;
  std::int64_t mu;
  bool flagged;  // mu != 1
};

/// mu(sigma, sigma + ... + sigma) for |sigma| <= sigma_max, copies >= 2,
/// copies * |sigma| <= len_cap.
std::vector<DirectSumCase> check_direct_sum(std::size_t sigma_max, std::size_t len_cap,
                                            const VincularScheme& scheme,
                                            unsigned jobs = 1);

struct BoundViolation {
  Permutation sigma;
  Permutation tau;
  std::int64_t mu;
};

struct BoundReport {
  std::size_t intervals = 0;
  std::int64_t max_abs = 0;
  std::vector<BoundViolation> flags;  // |mu| > bound
};

/*
  mu(sigma, tau) for every sigma <= tau, |tau| <= max_len. Values come from
  the top-down recursion on the whole down-set of tau, which restricted to
  the elements above sigma is the recursion on [sigma, tau].
*/
BoundReport check_mobius_bound(std::size_t max_len, const VincularScheme& scheme,
                               std::int64_t bound = 1, unsigned jobs = 1);

struct EquivWitness {
  std::string scheme;
  Permutation sigma;
  Permutation tau;
  bool contains;
  bool leq;
};

struct EquivReport {
  std::size_t schemes = 0;
  std::size_t pairs = 0;
  std::vector<EquivWitness> witnesses;
};

/// Pairs |sigma| < |tau| <= max_len where containment and the order disagree.
EquivReport equiv_search(const std::vector<VincularScheme>& schemes, std::size_t max_len,
                         unsigned jobs = 1);

/// Random explicit-row schemes with rows for lengths 1..max_len-1.
std::vector<VincularScheme> random_schemes(std::size_t count, std::size_t max_len,
                                           std::uint64_t seed);

/// All permutations of lengths lo..hi, shorter first, lexicographic within.
std::vector<Permutation> permutations_between(std::size_t lo, std::size_t hi);

}  // namespace vinpos::cli
