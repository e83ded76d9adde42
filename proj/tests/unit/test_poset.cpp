#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>
#include <string>

#include "../oracle.hpp"
#include "helpers.hpp"
#include "vinpos/errors.hpp"
#include "vinpos/poset.hpp"

using namespace vinpos;
using testing::P;
using testing::seq;

namespace {

const auto kQuasi = VincularScheme::quasi_consecutive();

std::vector<std::string> level_strings(const Interval& iv, std::size_t r) {
  std::vector<std::string> out;
  for (const auto& p : iv.level(r)) out.push_back(p.str());
  return out;
}

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("example 1: containment without the order") {
  const auto scheme = VincularScheme::parse("rows=0,1,0:fill=0");
  CHECK(contains(P("1234"), P("342156"), scheme));
  CHECK_FALSE(leq(P("1234"), P("342156"), scheme));
  CHECK_THROWS_AS(interval(P("1234"), P("342156"), scheme), NotComparableError);
}

TEST_CASE("example 2: the order without containment") {
  const auto scheme = VincularScheme::parse("rows=1,0,0,0;0,0,0,0,1:fill=0");
  CHECK_FALSE(contains(P("31524"), P("3615274"), scheme));
  CHECK(leq(P("31524"), P("3615274"), scheme));
  auto iv = interval(P("31524"), P("3615274"), scheme);
  CHECK(iv.rank() == 2);
  CHECK(iv.contains(P("361524")));
}

TEST_CASE("second column of ones: the order without containment") {
  const auto scheme = VincularScheme::parse("a=0,1");
  CHECK_FALSE(contains(P("123"), P("51423"), scheme));
  CHECK(leq(P("123"), P("51423"), scheme));
  auto iv = interval(P("123"), P("51423"), scheme);
  CHECK(iv.contains(P("4123")));
}

TEST_CASE("interval [132, 53142]") {
  auto iv = interval(P("132"), P("53142"), kQuasi);
  CHECK(iv.rank() == 2);
  CHECK(rank(iv) == 2);
  CHECK(iv.size() == 4);
  CHECK(level_strings(iv, 0) == std::vector<std::string>{"132"});
  CHECK(level_strings(iv, 1) == std::vector<std::string>{"3142", "4132"});
  CHECK(level_strings(iv, 2) == std::vector<std::string>{"53142"});
  CHECK(iv.edges().size() == 4);
  CHECK_FALSE(is_chain(iv));
  CHECK(atoms(iv) == std::vector<Permutation>{P("3142"), P("4132")});
  CHECK(coatoms(iv) == atoms(iv));
  CHECK(iv.bottom() == P("132"));
  CHECK(iv.top() == P("53142"));
  CHECK(iv.level_of(*iv.index_of(P("4132"))) == 1);
  CHECK_FALSE(iv.index_of(P("1234")).has_value());
}

TEST_CASE("degenerate intervals") {
  auto point = interval(P("2413"), P("2413"), kQuasi);
  CHECK(point.rank() == 0);
  CHECK(point.size() == 1);
  CHECK(point.edges().empty());
  CHECK(is_chain(point));
  CHECK(atoms(point).empty());
  auto chain = interval(P("1"), P("12345"), kQuasi);
  CHECK(is_chain(chain));
  CHECK(chain.rank() == 4);
  CHECK_THROWS_AS(interval(P("12"), P("21"), kQuasi), NotComparableError);
  CHECK_THROWS_AS(interval(P("123"), P("12"), kQuasi), NotComparableError);
}

TEST_CASE("poset helpers") {
  PatternPoset poset(kQuasi);
  CHECK(poset.covers(P("432516")) == std::vector<Permutation>{P("32415"), P("43251")});
  CHECK(poset.cache_size() == 1);
  CHECK(poset.leq(P("21"), P("432516")));
  CHECK_FALSE(poset.leq(P("123"), P("432516")));
  auto down = poset.down_set(P("132"));
  REQUIRE(down.size() == 3);
  CHECK(down[0] == std::vector<Permutation>{P("1")});
  CHECK(down[1] == std::vector<Permutation>{P("12"), P("21")});
  auto up = poset.up_set(P("1"), 3);
  REQUIRE(up.size() == 3);
  CHECK(up[1].size() == 2);
  CHECK(up[2].size() == 6);
  poset.clear_cache();
  CHECK(poset.cache_size() == 0);
}

TEST_CASE("property: down_set matches the closure oracle") {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::mt19937_64 rng(40 + n);
    for (int trial = 0; trial < 8; ++trial) {
      auto top = testing::random_permutation(rng, n);
      PatternPoset poset(kQuasi);
      std::set<std::vector<int>> got;
      for (const auto& level : poset.down_set(top)) {
        for (const auto& p : level) got.insert(seq(p));
      }
      CHECK(got == oracle::down_set(seq(top), oracle::quasi_type));
    }
  }
}

TEST_CASE("property: intervals are graded and edges join adjacent levels") {
  std::mt19937_64 rng(41);
  PatternPoset poset(kQuasi);
  for (int trial = 0; trial < 150; ++trial) {
    auto top = testing::random_permutation(rng, 2 + rng() % 6);
    auto down = poset.down_set(top);
    const auto& candidates = down[rng() % down.size()];
    auto bottom = candidates[rng() % candidates.size()];
    auto iv = poset.interval(bottom, top);
    CHECK(iv.rank() == top.size() - bottom.size());
    for (std::size_t i = 0; i < iv.size(); ++i) {
      CHECK(iv.elements()[i].size() == bottom.size() + iv.level_of(i));
      CHECK(poset.leq(bottom, iv.elements()[i]));
      CHECK(poset.leq(iv.elements()[i], top));
      if (i != 0) CHECK_FALSE(iv.lower_covers(i).empty());
      if (i + 1 != iv.size()) CHECK_FALSE(iv.upper_covers(i).empty());
    }
    for (const auto& e : iv.edges()) {
      CHECK(iv.level_of(e.upper) == iv.level_of(e.lower) + 1);
      CHECK(contains(iv.elements()[e.lower], iv.elements()[e.upper], kQuasi));
    }
  }
}

TEST_CASE("property: interval membership agrees with leq") {
  PatternPoset poset(kQuasi);
  const auto bottom = P("21");
  const auto top = P("351624");
  auto iv = poset.interval(bottom, top);
  for (std::size_t n = 2; n <= 6; ++n) {
    for_each_permutation(n, [&](const Permutation& z) {
      CHECK(iv.contains(z) == (poset.leq(bottom, z) && poset.leq(z, top)));
    });
  }
}

TEST_CASE("property: prefix-ones schemes have containment equal to the order") {
  for (std::size_t ones = 0; ones <= 3; ++ones) {
    const auto scheme = VincularScheme::prefix_ones(ones);
    PatternPoset poset(scheme);
    for (std::size_t n = 1; n <= 6; ++n) {
      for_each_permutation(n, [&](const Permutation& tau) {
        for (std::size_t k = 1; k <= n; ++k) {
          for_each_permutation(k, [&](const Permutation& sigma) {
            REQUIRE(contains(sigma, tau, scheme) == poset.leq(sigma, tau));
          });
        }
      });
    }
  }
}

TEST_CASE("property: constant columns, occurrence implies order") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::uint8_t> prefix(rng() % 5);
    for (auto& b : prefix) b = static_cast<std::uint8_t>(rng() & 1U);
    const VincularScheme scheme(ConstantColumns{prefix});
    auto tau = testing::random_permutation(rng, 2 + rng() % 6);
    auto sigma = testing::random_permutation(rng, 1 + rng() % tau.size());
    if (contains(sigma, tau, scheme)) CHECK(leq(sigma, tau, scheme));
  }
}

TEST_CASE("property: one cover means a chain down to the monotone permutation") {
  for (std::size_t n = 2; n <= 7; ++n) {
    for_each_permutation(n, [&](const Permutation& tau) {
      if (covered_by(tau, kQuasi).size() != 1) return;
      CHECK(is_monotone(tau));
      CHECK(is_chain(interval(P("1"), tau, kQuasi)));
    });
  }
}

TEST_CASE("property: two covers classified by the first two entries") {
  for (std::size_t n = 3; n <= 7; ++n) {
    for_each_permutation(n, [&](const Permutation& tau) {
      const auto covers = covered_by(tau, kQuasi);
      const auto first = remove_entry(tau, 1);
      const auto second = remove_entry(tau, 2);
      const auto last = remove_entry(tau, n);
      const std::size_t distinct =
          std::set<Permutation>{first, second, last}.size();
      CHECK(covers.size() == distinct);
      if (std::abs(tau[0] - tau[1]) == 1) CHECK(first == second);
    });
  }
}

TEST_CASE("DOT export") {
  auto iv = interval(P("132"), P("53142"), kQuasi);
  const auto dot = export_dot(iv);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(count_of(dot, " -> ") == iv.edges().size());
  CHECK(count_of(dot, "label=") == iv.size());
  CHECK(count_of(dot, "rank=same") == iv.rank() + 1);
  CHECK(dot.find("\"53142\"") != std::string::npos);
}

TEST_CASE("property: two covers with a1, a2 not consecutive are the two exceptions") {
  for (std::size_t n = 3; n <= 7; ++n) {
    std::vector<int> up{1}, down{static_cast<int>(n)};
    for (int v = static_cast<int>(n); v >= 2; --v) up.push_back(v);
    for (int v = 1; v < static_cast<int>(n); ++v) down.push_back(v);
    const Permutation one_down(up), top_first(down);
    for_each_permutation(n, [&](const Permutation& tau) {
      if (covered_by(tau, kQuasi).size() != 2 || std::abs(tau[0] - tau[1]) == 1) return;
      CHECK((tau == one_down || tau == top_first));
    });
  }
}
