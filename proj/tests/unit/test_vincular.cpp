#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "../oracle.hpp"
#include "helpers.hpp"
#include "vinpos/vincular.hpp"

using namespace vinpos;
using testing::P;
using testing::seq;

namespace {

std::vector<std::vector<std::size_t>> positions(const std::vector<Occurrence>& occs) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& o : occs) out.push_back(o.positions);
  return out;
}

std::vector<int> bits_of(const AdjacencyVector& v) { return {v.bits().begin(), v.bits().end()}; }

const auto kQuasi = VincularScheme::quasi_consecutive();

// Example schemes.
VincularScheme example1() { return VincularScheme::parse("rows=0,1,0:fill=0"); }
VincularScheme example2() { return VincularScheme::parse("rows=1,0,0,0;0,0,0,0,1:fill=0"); }
VincularScheme second_column() { return VincularScheme::parse("a=0,1"); }

}  // namespace

TEST_CASE("type_vector") {
  CHECK(type_vector(kQuasi, 4) == AdjacencyVector{1, 0, 0});
  CHECK(type_vector(VincularScheme::consecutive(), 5) == AdjacencyVector{0, 0, 0, 0});
  CHECK(type_vector(VincularScheme::classical(), 3) == AdjacencyVector{1, 1});
  CHECK(type_vector(kQuasi, 1).empty());
  CHECK(type_vector(example1(), 4) == AdjacencyVector{0, 1, 0});
  CHECK(type_vector(example1(), 5) == AdjacencyVector{0, 0, 0, 0});
  CHECK(type_vector(second_column(), 3) == AdjacencyVector{0, 1});
  CHECK(type_vector(second_column(), 5) == AdjacencyVector{0, 1, 0, 0});
  CHECK(type_vector(VincularScheme::parse("rows=1:fill=1"), 4) == AdjacencyVector{1, 1, 1});
}

TEST_CASE("scheme text form and fingerprint") {
  CHECK(VincularScheme::parse("quasi").fingerprint() == "quasi");
  CHECK(VincularScheme::parse("a=1,0,0").fingerprint() == "quasi");
  CHECK(VincularScheme::parse("a=1,0,0") == kQuasi);
  CHECK(VincularScheme::parse("a=0,0").fingerprint() == "consecutive");
  CHECK(VincularScheme::parse("a=1,1").fingerprint() == "a=1,1");
  CHECK(VincularScheme::parse("rows=0,1,0;0,0,0,0:fill=0").fingerprint() == "rows=0,1,0:fill=0");
  CHECK(VincularScheme::parse("rows=1;1,1:fill=1").fingerprint() == "classical");
  CHECK(VincularScheme::parse("rows=:fill=0").fingerprint() == "consecutive");
  const auto s = VincularScheme::parse("rows=1,0,0,0;0,0,0,0,1:fill=0");
  CHECK(VincularScheme::parse(s.fingerprint()) == s);

  CHECK_THROWS_AS(VincularScheme::parse("bogus"), std::invalid_argument);
  CHECK_THROWS_AS(VincularScheme::parse("a=1,2"), std::invalid_argument);
  CHECK_THROWS_AS(VincularScheme::parse("rows=0,1:fill=2"), std::invalid_argument);
  CHECK_THROWS_AS(VincularScheme::parse("rows=0,1;1,1:fill=0"), std::invalid_argument);
  ExplicitRows bad;
  bad.rows.emplace(3, AdjacencyVector{0, 1});
  CHECK_THROWS_AS(VincularScheme{bad}, std::invalid_argument);
}

TEST_CASE("dashed permutations") {
  auto d = DashedPermutation::parse("5-13-42");
  CHECK(d.base() == P("51342"));
  CHECK(d.dashes() == AdjacencyVector{1, 0, 1, 0});
  CHECK(d.str() == "5-13-42");
  CHECK_THROWS_AS(DashedPermutation::parse("-12"), std::invalid_argument);
  CHECK_THROWS_AS(DashedPermutation::parse("1--2"), std::invalid_argument);
  CHECK_THROWS_AS(DashedPermutation(P("12"), AdjacencyVector{1, 1}), std::invalid_argument);
  // 2-31 in 432516: the entries 351.
  CHECK(contains(DashedPermutation::parse("2-31"), P("432516")));
  CHECK_FALSE(contains(DashedPermutation::parse("1-23"), P("432516")));
  CHECK(contains(DashedPermutation::parse("12-3"), P("432516")));
  CHECK(contains(DashedPermutation::parse("1-2-3"), P("432516")));
}

TEST_CASE("occurrences") {
  const auto occs = occurrences(P("231"), P("432516"), kQuasi);
  const std::vector<std::vector<std::size_t>> expected{{1, 4, 5}, {2, 4, 5}, {3, 4, 5}};
  CHECK(oracle::occurrences({2, 3, 1}, {1, 0}, {4, 3, 2, 5, 1, 6}) == expected);
  CHECK(positions(occs) == expected);
  CHECK(std::find(occs.begin(), occs.end(), Occurrence{{2, 4, 5}}) != occs.end());
  CHECK(occurrences(P("123"), P("432516"), kQuasi).empty());
  CHECK_THROWS_AS(occurrences(P("1234"), P("123"), kQuasi), std::invalid_argument);
}

TEST_CASE("contains on the example schemes") {
  CHECK(contains(P("1234"), P("342156"), example1()));
  CHECK(positions(occurrences(P("1234"), P("342156"), example1())) ==
        std::vector<std::vector<std::size_t>>{{1, 2, 5, 6}});
  CHECK_FALSE(contains(P("31524"), P("3615274"), example2()));
  CHECK(contains(P("31524"), P("361524"), example2()));
  CHECK(contains(P("361524"), P("3615274"), example2()));
  CHECK_FALSE(contains(P("123"), P("51423"), second_column()));
  CHECK(contains(P("123"), P("4123"), second_column()));
  CHECK(contains(P("4123"), P("51423"), second_column()));
  CHECK_FALSE(contains(P("123"), P("12"), kQuasi));
}

TEST_CASE("count_occurrences") {
  CHECK(oracle::occurrences({1, 3, 2}, {1, 0}, {5, 3, 1, 4, 2}).size() == 1);
  CHECK(count_occurrences(P("132"), P("53142"), kQuasi) == 1);
  CHECK(count_occurrences(P("231"), P("432516"), kQuasi) == 3);
  CHECK(count_occurrences(P("123"), P("12"), kQuasi) == 0);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    auto p = testing::random_permutation(rng, 1 + rng() % 8);
    CHECK(count_occurrences(p, p, kQuasi) == 1);
    CHECK(count_occurrences(p, p, VincularScheme::classical()) == 1);
    CHECK(count_occurrences(p, p, example1()) == 1);
  }
}

TEST_CASE("covered_by") {
  CHECK(covered_by(P("432516"), kQuasi) == std::vector<Permutation>{P("32415"), P("43251")});
  CHECK(covered_by(P("12345"), kQuasi) == std::vector<Permutation>{P("1234")});
  CHECK(covered_by(P("531426"), kQuasi) ==
        std::vector<Permutation>{P("31425"), P("41325"), P("53142")});
  CHECK(covered_by(P("1"), kQuasi).empty());
}

TEST_CASE("property: quasi covering is first, second or last removal") {
  for (std::size_t n = 2; n <= 7; ++n) {
    for_each_permutation(n, [&](const Permutation& tau) {
      std::vector<Permutation> removal{remove_entry(tau, 1), remove_entry(tau, 2),
                                       remove_entry(tau, n)};
      std::sort(removal.begin(), removal.end());
      removal.erase(std::unique(removal.begin(), removal.end()), removal.end());
      const auto covers = covered_by(tau, kQuasi);
      REQUIRE(covers == removal);
      REQUIRE(covers.size() >= 1);
      REQUIRE(covers.size() <= 3);
    });
  }
}

TEST_CASE("property: covered_by agrees with scanning all shorter permutations") {
  for (std::size_t n = 2; n <= 6; ++n) {
    for_each_permutation(n, [&](const Permutation& tau) {
      const auto expected = oracle::covers(seq(tau), oracle::quasi_type);
      std::vector<std::vector<int>> got;
      for (const auto& c : covered_by(tau, kQuasi)) got.push_back(seq(c));
      REQUIRE(got == expected);
    });
  }
}

TEST_CASE("property: consecutive occurrences are contiguous blocks") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    auto text = testing::random_permutation(rng, 1 + rng() % 7);
    auto pattern = testing::random_permutation(rng, 1 + rng() % text.size());
    for (const auto& occ : occurrences(pattern, text, VincularScheme::consecutive())) {
      CHECK(occ.contiguous());
    }
  }
}

TEST_CASE("property: classical occurrences are all order-isomorphic subsequences") {
  for (std::size_t n = 1; n <= 7; ++n) {
    std::mt19937_64 rng(n);
    for (int trial = 0; trial < 40; ++trial) {
      auto text = testing::random_permutation(rng, n);
      auto pattern = testing::random_permutation(rng, 1 + rng() % n);
      const std::vector<int> ones(pattern.size() - 1, 1);
      CHECK(positions(occurrences(pattern, text, VincularScheme::classical())) ==
            oracle::occurrences(seq(pattern), ones, seq(text)));
    }
  }
}

TEST_CASE("property: occurrences match the subsequence oracle under random schemes") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 400; ++trial) {
    auto text = testing::random_permutation(rng, 1 + rng() % 7);
    auto pattern = testing::random_permutation(rng, 1 + rng() % text.size());
    std::vector<std::uint8_t> bits(pattern.size() - 1);
    for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1U);
    DashedPermutation dashed(pattern, AdjacencyVector(bits));
    CHECK(positions(occurrences(dashed, text)) ==
          oracle::occurrences(seq(pattern), std::vector<int>(bits.begin(), bits.end()), seq(text)));
  }
}

TEST_CASE("property: a length-1 pattern matches every entry") {
  for (const char* scheme : {"quasi", "classical", "consecutive", "rows=0,1,0:fill=0"}) {
    for (std::size_t n = 1; n <= 7; ++n) {
      auto text = Permutation::decreasing(n);
      CHECK(occurrences(P("1"), text, VincularScheme::parse(scheme)).size() == n);
    }
  }
}

TEST_CASE("property: flipping a 0 bit to 1 never loses occurrences") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 500; ++trial) {
    auto text = testing::random_permutation(rng, 2 + rng() % 6);
    auto pattern = testing::random_permutation(rng, 2 + rng() % (text.size() - 1));
    std::vector<std::uint8_t> bits(pattern.size() - 1);
    for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1U);
    const auto zero = std::find(bits.begin(), bits.end(), 0);
    if (zero == bits.end()) continue;
    auto tight = occurrences(DashedPermutation(pattern, AdjacencyVector(bits)), text);
    *zero = 1;
    auto loose = occurrences(DashedPermutation(pattern, AdjacencyVector(bits)), text);
    CHECK(std::includes(loose.begin(), loose.end(), tight.begin(), tight.end()));
  }
}

TEST_CASE("occurrence helpers") {
  Occurrence o{{3, 4, 5}};
  CHECK(o.contiguous());
  CHECK(o.involves(4));
  CHECK_FALSE(o.involves(1));
  CHECK(o.str() == "(3,4,5)");
  CHECK_FALSE(Occurrence{{1, 3}}.contiguous());
  CHECK(bits_of(AdjacencyVector::parse("1,0,1")) == std::vector<int>{1, 0, 1});
}
