#include "vinpos/mobius.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "vinpos/errors.hpp"

namespace vinpos {

namespace {

class Bitset {
 public:
  explicit Bitset(std::size_t n) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
  }

 private:
  std::vector<std::uint64_t> words_;
};

std::int64_t checked_sub(std::int64_t acc, std::int64_t v) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(acc, v, &out)) {
    throw std::overflow_error("Moebius value exceeds 64 bits");
  }
  return out;
}

const VincularScheme& quasi() {
  static const VincularScheme scheme = VincularScheme::quasi_consecutive();
  return scheme;
}

std::string occurrences_message(std::size_t k) {
  return "not applicable: " + std::to_string(k) + " occurrences";
}

}  // namespace

std::vector<std::int64_t> mobius_from_bottom(const Interval& iv) {
  const std::size_t n = iv.size();
  std::vector<Bitset> below(n, Bitset(n));
  std::vector<std::int64_t> mu(n, 0);
  // Elements are in level order, so every strict lower bound of i precedes i.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l : iv.lower_covers(i)) {
      below[i] |= below[l];
      below[i].set(l);
    }
    if (i == 0) {
      mu[i] = 1;
      continue;
    }
    std::int64_t acc = 0;
    for (std::size_t z = 0; z < i; ++z) {
      if (below[i].test(z)) acc = checked_sub(acc, mu[z]);
    }
    mu[i] = acc;
  }
  return mu;
}

std::vector<std::int64_t> mobius_to_top(const Interval& iv) {
  const std::size_t n = iv.size();
  std::vector<Bitset> above(n, Bitset(n));
  std::vector<std::int64_t> mu(n, 0);
  for (std::size_t k = n; k-- > 0;) {
    for (std::size_t u : iv.upper_covers(k)) {
      above[k] |= above[u];
      above[k].set(u);
    }
    if (k == n - 1) {
      mu[k] = 1;
      continue;
    }
    std::int64_t acc = 0;
    for (std::size_t z = k + 1; z < n; ++z) {
      if (above[k].test(z)) acc = checked_sub(acc, mu[z]);
    }
    mu[k] = acc;
  }
  return mu;
}

std::int64_t mobius_bruteforce(const Interval& iv, Direction direction) {
  if (direction == Direction::BottomUp) return mobius_from_bottom(iv).back();
  return mobius_to_top(iv).front();
}

std::string_view to_string(CaseLabel label) noexcept {
  switch (label) {
    case CaseLabel::Equal:
      return "EQUAL";
    case CaseLabel::Covered:
      return "COVERED";
    case CaseLabel::Rank2FirstEntry:
      return "RANK2_FIRST_ENTRY";
    case CaseLabel::Rank2SecondEntry:
      return "RANK2_SECOND_ENTRY";
    case CaseLabel::Rank2LastEntryNonconsec:
      return "RANK2_LAST_ENTRY_NONCONSEC";
    case CaseLabel::Rank3Exceptional:
      return "RANK3_EXCEPTIONAL";
    case CaseLabel::Zero:
      return "ZERO";
  }
  return "ZERO";
}

std::int64_t case_value(CaseLabel label) noexcept {
  switch (label) {
    case CaseLabel::Equal:
    case CaseLabel::Rank2FirstEntry:
    case CaseLabel::Rank2SecondEntry:
    case CaseLabel::Rank2LastEntryNonconsec:
      return 1;
    case CaseLabel::Covered:
    case CaseLabel::Rank3Exceptional:
      return -1;
    case CaseLabel::Zero:
      return 0;
  }
  return 0;
}

CaseLabel classify_single_occurrence(const Permutation& sigma, const Permutation& tau) {
  if (sigma.size() > tau.size()) throw NotApplicableError(occurrences_message(0));
  const auto occs = occurrences(sigma, tau, quasi());
  if (occs.size() != 1) throw NotApplicableError(occurrences_message(occs.size()));
  const Occurrence& occ = occs.front();

  const std::size_t n = tau.size();
  const std::size_t rk = n - sigma.size();
  if (rk == 0) return CaseLabel::Equal;
  if (rk == 1) return CaseLabel::Covered;

  const bool first = occ.involves(1);
  const bool second = occ.involves(2);
  const bool last = occ.involves(n);

  if (rk == 2) {
    if (first && !second && !last) return CaseLabel::Rank2FirstEntry;
    if (second && !first && !last) return CaseLabel::Rank2SecondEntry;
    if (last && !first && !second && std::abs(tau[0] - tau[1]) != 1) {
      return CaseLabel::Rank2LastEntryNonconsec;
    }
    return CaseLabel::Zero;
  }

  if (rk == 3 && occ.involves(n - 1) && !first && !second && !last &&
      occ.contiguous()) {
    // Only the coatoms are needed: tau's covers are its first, second and
    // last removals, and inside the quasi-consecutive poset <= is containment.
    std::vector<Permutation> tops{remove_entry(tau, 1), remove_entry(tau, 2),
                                  remove_entry(tau, n)};
    std::sort(tops.begin(), tops.end());
    tops.erase(std::unique(tops.begin(), tops.end()), tops.end());
    const auto inside = std::count_if(tops.begin(), tops.end(), [&](const Permutation& p) {
      return contains(sigma, p, quasi());
    });
    if (inside == 3) return CaseLabel::Rank3Exceptional;
  }
  return CaseLabel::Zero;
}

std::int64_t mobius_closed_form(const Permutation& sigma, const Permutation& tau) {
  return case_value(classify_single_occurrence(sigma, tau));
}

std::string_view to_string(Method method) noexcept {
  return method == Method::ClosedForm ? "closed_form" : "brute_force";
}

std::string_view to_string(Strategy strategy) noexcept {
  switch (strategy) {
    case Strategy::Auto:
      return "auto";
    case Strategy::Brute:
      return "brute";
    case Strategy::Theorem:
      return "theorem";
  }
  return "auto";
}

Strategy parse_strategy(std::string_view text) {
  if (text == "auto") return Strategy::Auto;
  if (text == "brute") return Strategy::Brute;
  if (text == "theorem") return Strategy::Theorem;
  throw std::invalid_argument("unknown method '" + std::string(text) + "'");
}

MobiusEvaluation mobius(PatternPoset& poset, const Permutation& sigma,
                        const Permutation& tau, Strategy strategy) {
  MobiusEvaluation eval;
  eval.occurrence_count = count_occurrences(sigma, tau, poset.scheme());
  eval.rank = static_cast<std::int64_t>(tau.size()) - static_cast<std::int64_t>(sigma.size());

  const bool quasi_scheme = poset.scheme().is_quasi_consecutive();
  const bool theorem_applies = quasi_scheme && eval.occurrence_count == 1;
  if (strategy == Strategy::Theorem && !theorem_applies) {
    if (!quasi_scheme) {
      throw NotApplicableError("not applicable: scheme " + poset.scheme().fingerprint() +
                               " is not quasi-consecutive");
    }
    throw NotApplicableError(occurrences_message(eval.occurrence_count));
  }
  if (strategy != Strategy::Brute && theorem_applies) {
    const CaseLabel label = classify_single_occurrence(sigma, tau);
    eval.value = case_value(label);
    eval.method = Method::ClosedForm;
    eval.case_label = label;
    return eval;
  }
  eval.method = Method::BruteForce;
  if (!poset.leq(sigma, tau)) {
    eval.value = 0;
    return eval;
  }
  eval.value = mobius_bruteforce(poset.interval(sigma, tau));
  return eval;
}

MobiusEvaluation mobius(const Permutation& sigma, const Permutation& tau,
                        const VincularScheme& scheme, Strategy strategy) {
  PatternPoset poset(scheme);
  return mobius(poset, sigma, tau, strategy);
}

bool two_cover_grid_applies(const Permutation& sigma, const Permutation& tau) {
  if (tau.size() < 2 || sigma.size() > tau.size()) return false;
  if (covered_by(tau, quasi()).size() != 2) return false;
  if (std::abs(tau[0] - tau[1]) == 1) return false;
  if (sigma == tau || sigma.size() == 1) return true;
  const auto occs = occurrences(sigma, tau, quasi());
  if (occs.empty()) return false;
  return std::none_of(occs.begin(), occs.end(),
                      [](const Occurrence& o) { return o.involves(1); });
}

std::int64_t two_cover_grid_mobius(const Permutation& sigma, const Permutation& tau) {
  if (!two_cover_grid_applies(sigma, tau)) {
    throw NotApplicableError("not applicable: two-cover grid conditions fail for (" +
                             sigma.str() + ", " + tau.str() + ")");
  }
  switch (tau.size() - sigma.size()) {
    case 0:
      return 1;
    case 1:
      return -1;
    case 2:
      return 1;
    default:
      return 0;
  }
}

}  // namespace vinpos
