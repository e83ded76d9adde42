#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vinpos/permutation.hpp"
#include "vinpos/poset.hpp"
#include "vinpos/vincular.hpp"

namespace vinpos {

enum class Direction { BottomUp, TopDown };

/// mu(bottom, x) for every element x, indexed like iv.elements().
std::vector<std::int64_t> mobius_from_bottom(const Interval& iv);

/// mu(x, top) for every element x, indexed like iv.elements().
std::vector<std::int64_t> mobius_to_top(const Interval& iv);

/// mu(bottom, top) by the defining recursion, swept level by level.
/// Throws std::overflow_error rather than wrapping.
std::int64_t mobius_bruteforce(const Interval& iv,
                               Direction direction = Direction::BottomUp);

/*
  Cases of the closed form for a pattern occurring exactly once in the
  quasi-consecutive poset. Positions below refer to tau = a1 a2 ... an.

    Equal                     sigma == tau                          ->  1
    Covered                   rank 1                                -> -1
    Rank2FirstEntry           rank 2, uses a1, not a2 or an         ->  1
    Rank2SecondEntry          rank 2, uses a2, not a1 or an         ->  1
    Rank2LastEntryNonconsec   rank 2, uses an, not a1 or a2,
                              |a1 - a2| != 1                        ->  1
    Rank3Exceptional          rank 3, uses a(n-1) but none of
                              a1, a2, an, occurrence contiguous,
                              tau covers three elements of the
                              interval                              -> -1
    Zero                      anything else                         ->  0
*/
enum class CaseLabel {
  Equal,
  Covered,
  Rank2FirstEntry,
  Rank2SecondEntry,
  Rank2LastEntryNonconsec,
  Rank3Exceptional,
  Zero,
};

/// "EQUAL", "COVERED", "RANK2_FIRST_ENTRY", ...
std::string_view to_string(CaseLabel label) noexcept;
std::int64_t case_value(CaseLabel label) noexcept;

/// Throws NotApplicableError unless sigma occurs exactly once in tau.
CaseLabel classify_single_occurrence(const Permutation& sigma, const Permutation& tau);

std::int64_t mobius_closed_form(const Permutation& sigma, const Permutation& tau);

enum class Strategy { Auto, Brute, Theorem };
enum class Method { BruteForce, ClosedForm };

std::string_view to_string(Method method) noexcept;
std::string_view to_string(Strategy strategy) noexcept;
Strategy parse_strategy(std::string_view text);

struct MobiusEvaluation {
  std::int64_t value = 0;
  Method method = Method::BruteForce;
  std::optional<CaseLabel> case_label;  // set iff method == ClosedForm
  std::size_t occurrence_count = 0;
  std::int64_t rank = 0;                // |tau| - |sigma|
};

/*
  Dispatch wrapper. Incomparable pairs evaluate to 0 by brute force. Auto
  takes the closed form when the scheme is quasi-consecutive and sigma occurs
  once; Theorem insists on it and throws NotApplicableError otherwise.
*/
MobiusEvaluation mobius(PatternPoset& poset, const Permutation& sigma,
                        const Permutation& tau, Strategy strategy = Strategy::Auto);
MobiusEvaluation mobius(const Permutation& sigma, const Permutation& tau,
                        const VincularScheme& scheme,
                        Strategy strategy = Strategy::Auto);

/// Whether two_cover_grid_mobius accepts (sigma, tau).
bool two_cover_grid_applies(const Permutation& sigma, const Permutation& tau);

/// 1, -1, 1, 0 as |sigma| = n, n-1, n-2, less. Applies when tau covers
/// exactly two permutations in the quasi-consecutive poset, a1 and a2 are
/// not consecutive integers, and sigma <= tau is 1, tau, or has no
/// occurrence through a1. Throws NotApplicableError otherwise.
std::int64_t two_cover_grid_mobius(const Permutation& sigma, const Permutation& tau);

}  // namespace vinpos
