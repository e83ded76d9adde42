#include "vinpos/cli/sweeps.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

#include "vinpos/poset.hpp"

namespace vinpos::cli {

namespace {

// Runs fn(i, poset) for i in [0, count). Each worker owns its poset cache.
template <class Fn>
void parallel_for(std::size_t count, unsigned jobs, const VincularScheme& scheme, Fn&& fn) {
  const unsigned workers =
      static_cast<unsigned>(std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(count, 1)));
  if (workers == 1) {
    PatternPoset poset(scheme);
    for (std::size_t i = 0; i < count; ++i) fn(i, poset);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        PatternPoset poset(scheme);
        try {
          for (std::size_t i = next++; i < count; i = next++) fn(i, poset);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = count;
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

struct TargetResult {
  std::size_t checked = 0;
  std::size_t matched = 0;
  std::size_t direction_disagreements = 0;
  std::map<CaseLabel, std::size_t> by_case;
  std::vector<TheoremMismatch> mismatches;
};

}  // namespace

std::vector<Permutation> permutations_between(std::size_t lo, std::size_t hi) {
  std::vector<Permutation> out;
  for (std::size_t n = std::max<std::size_t>(lo, 1); n <= hi; ++n) {
    for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); });
  }
  return out;
}

TheoremReport verify_theorem(std::size_t max_len, unsigned jobs) {
  const auto quasi = VincularScheme::quasi_consecutive();
  const auto targets = permutations_between(1, max_len);
  std::vector<TargetResult> results(targets.size());

  parallel_for(targets.size(), jobs, quasi, [&](std::size_t i, PatternPoset& poset) {
    const Permutation& tau = targets[i];
    TargetResult& res = results[i];
    for (const auto& level : poset.down_set(tau)) {
      for (const auto& sigma : level) {
        if (count_occurrences(sigma, tau, quasi) != 1) continue;
        const CaseLabel label = classify_single_occurrence(sigma, tau);
        const std::int64_t closed = case_value(label);
        const Interval iv = poset.interval(sigma, tau);
        const std::int64_t up = mobius_bruteforce(iv, Direction::BottomUp);
        const std::int64_t down = mobius_bruteforce(iv, Direction::TopDown);
        ++res.checked;
        ++res.by_case[label];
        if (up != down) ++res.direction_disagreements;
        if (closed == up) {
          ++res.matched;
        } else {
          res.mismatches.push_back({sigma, tau, label, closed, up});
        }
      }
    }
  });

  TheoremReport report;
  report.max_len = max_len;
  report.targets = targets.size();
  for (auto& r : results) {
    report.checked += r.checked;
    report.matched += r.matched;
    report.direction_disagreements += r.direction_disagreements;
    for (const auto& [label, n] : r.by_case) report.by_case[label] += n;
    for (auto& m : r.mismatches) report.mismatches.push_back(std::move(m));
  }
  return report;
}

std::vector<SurveyRecord> survey(const Permutation& sigma, std::size_t max_len,
                                 const VincularScheme& scheme,
                                 const std::set<std::string>& skip, unsigned jobs) {
  std::vector<Permutation> targets;
  {
    PatternPoset poset(scheme);
    auto up = poset.up_set(sigma, max_len);
    for (std::size_t l = 1; l < up.size(); ++l) {
      for (auto& tau : up[l]) {
        if (!skip.contains(tau.str())) targets.push_back(std::move(tau));
      }
    }
  }
  std::vector<SurveyRecord> records(targets.size());
  parallel_for(targets.size(), jobs, scheme, [&](std::size_t i, PatternPoset& poset) {
    const auto eval = mobius(poset, sigma, targets[i], Strategy::Auto);
    records[i] = make_record(sigma, targets[i], scheme, eval);
  });
  return records;
}

SurveySummary summarize(const std::vector<SurveyRecord>& records) {
  SurveySummary s;
  std::optional<Permutation> best;
  for (const auto& r : records) {
    ++s.distribution[r.mu];
    const std::int64_t a = r.mu < 0 ? -r.mu : r.mu;
    const Permutation tau = Permutation::parse(r.tau);
    if (!best || a > s.max_abs || (a == s.max_abs && tau < *best)) {
      s.max_abs = a;
      best = tau;
    }
  }
  if (best) s.witness = best->str();
  return s;
}

std::vector<DirectSumCase> check_direct_sum(std::size_t sigma_max, std::size_t len_cap,
                                            const VincularScheme& scheme, unsigned jobs) {
  std::vector<DirectSumCase> cases;
  for (const auto& sigma : permutations_between(1, sigma_max)) {
    Permutation tau = sigma;
    for (std::size_t copies = 2; copies * sigma.size() <= len_cap; ++copies) {
      tau = direct_sum(tau, sigma);
      cases.push_back({sigma, copies, tau, 0, false});
    }
  }
  parallel_for(cases.size(), jobs, scheme, [&](std::size_t i, PatternPoset& poset) {
    auto& c = cases[i];
    c.mu = mobius(poset, c.sigma, c.tau, Strategy::Auto).value;
    c.flagged = c.mu != 1;
  });
  return cases;
}

BoundReport check_mobius_bound(std::size_t max_len, const VincularScheme& scheme,
                               std::int64_t bound, unsigned jobs) {
  const auto targets = permutations_between(1, max_len);
  std::vector<BoundReport> partial(targets.size());
  parallel_for(targets.size(), jobs, scheme, [&](std::size_t i, PatternPoset& poset) {
    const Interval iv = poset.interval(Permutation{1}, targets[i]);
    const auto mu = mobius_to_top(iv);
    auto& rep = partial[i];
    for (std::size_t e = 0; e < iv.size(); ++e) {
      ++rep.intervals;
      const std::int64_t a = std::abs(mu[e]);
      rep.max_abs = std::max(rep.max_abs, a);
      if (a > bound) rep.flags.push_back({iv.elements()[e], targets[i], mu[e]});
    }
  });
  BoundReport report;
  for (auto& p : partial) {
    report.intervals += p.intervals;
    report.max_abs = std::max(report.max_abs, p.max_abs);
    for (auto& f : p.flags) report.flags.push_back(std::move(f));
  }
  return report;
}

EquivReport equiv_search(const std::vector<VincularScheme>& schemes, std::size_t max_len,
                         unsigned jobs) {
  EquivReport report;
  const auto targets = permutations_between(2, max_len);
  const auto patterns = permutations_between(1, max_len > 1 ? max_len - 1 : 1);
  for (const auto& scheme : schemes) {
    ++report.schemes;
    std::vector<std::vector<EquivWitness>> found(targets.size());
    std::vector<std::size_t> pairs(targets.size(), 0);
    parallel_for(targets.size(), jobs, scheme, [&](std::size_t i, PatternPoset& poset) {
      const Permutation& tau = targets[i];
      const auto below = poset.down_set(tau);
      for (const auto& sigma : patterns) {
        if (sigma.size() >= tau.size()) break;
        ++pairs[i];
        const auto& level = below[sigma.size() - 1];
        const bool le = std::binary_search(level.begin(), level.end(), sigma);
        const bool in = contains(sigma, tau, scheme);
        if (le != in) found[i].push_back({scheme.fingerprint(), sigma, tau, in, le});
      }
    });
    for (std::size_t i = 0; i < targets.size(); ++i) {
      report.pairs += pairs[i];
      for (auto& w : found[i]) report.witnesses.push_back(std::move(w));
    }
  }
  return report;
}

std::vector<VincularScheme> random_schemes(std::size_t count, std::size_t max_len,
                                           std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<VincularScheme> out;
  out.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    ExplicitRows rows;
    for (std::size_t k = 1; k + 1 <= max_len; ++k) {
      std::vector<std::uint8_t> bits(k);
      for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1U);
      rows.rows.emplace(k, AdjacencyVector(std::move(bits)));
    }
    rows.default_fill = (rng() & 1U) != 0;
    out.emplace_back(std::move(rows));
  }
  return out;
}

}  // namespace vinpos::cli
