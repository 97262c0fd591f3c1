#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "helpers.hpp"
#include "ucyc/classes.hpp"

using namespace ucyc;
using testing::digits;
using testing::word;
using V = ExistenceClaim::Verdict;

namespace {

ClassSpec spec(Alphabet a, std::size_t k, ClassKind kind) {
  return ClassSpec{std::move(a), k, kind};
}

Alphabet alternating_alphabet(std::vector<std::size_t> sizes) {
  std::vector<std::string> symbols;
  Alphabet::Categories cats;
  Letter next = 0;
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    cats.emplace_back();
    for (std::size_t i = 0; i < sizes[c]; ++i) {
      symbols.push_back(std::string(1, char('A' + next)));
      cats.back().push_back(next++);
    }
  }
  return Alphabet(std::move(symbols), false, std::move(cats));
}

}  // namespace

TEST_CASE("monotone membership") {
  auto az = Alphabet::of_size(26);
  CHECK(is_member(spec(az, 9, kind::Monotone{}), word(az, "gggkklabf")));
  CHECK_FALSE(is_member(spec(az, 9, kind::Monotone{}), word(az, "gggkklabl")));
  CHECK(is_member(spec(az, 4, kind::Monotone{}), word(az, "aaaa")));
  CHECK(is_member(spec(az, 12, kind::Monotone{}), word(az, "aaabbccgglln")));
  CHECK_FALSE(
      is_member(spec(az, 12, kind::Monotone{}), word(az, "aaabbggcclln")));
  auto bin = digits(2);
  CHECK_FALSE(is_member(spec(bin, 4, kind::Monotone{}), word(bin, "0101")));
  CHECK_FALSE(is_member(spec(bin, 4, kind::Monotone{}), word(bin, "1010")));
  auto abc = Alphabet({"A", "B", "C"});
  for (auto bad : {"ACB", "CBA", "BAC"}) {
    CHECK_FALSE(is_member(spec(abc, 3, kind::Monotone{}), word(abc, bad)));
  }
}

TEST_CASE("cyclic_descents") {
  auto bin = digits(2);
  CHECK(cyclic_descents(word(bin, "0101")) == 2);
  auto az = Alphabet::of_size(26);
  CHECK(cyclic_descents(word(az, "aaaa")) == 0);
  CHECK(cyclic_descents(word(az, "abfgggkkl")) == 1);
}

TEST_CASE("monotone iff at most one cyclic descent, n <= 4, k <= 7") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t k = 1; k <= 7; ++k) {
      const auto s = spec(Alphabet::of_size(n), k, kind::Monotone{});
      const Membership member(s);
      for (const auto& w : oracle::all_words(int(n), int(k))) {
        const Word word = testing::from_ints(w);
        const bool m = member(word.letters());
        CHECK(m == (cyclic_descents(word) <= 1));
        CHECK(m == oracle::monotone(w));
      }
    }
  }
}

TEST_CASE("cyclic categories membership") {
  const auto honey = honeycomb_alphabet();
  const auto s3 = spec(honey, 3, kind::CyclicCategories{});
  CHECK(is_member(s3, word(honey, "x+,y-,z+")));
  CHECK_FALSE(is_member(spec(honey, 2, kind::CyclicCategories{}),
                        word(honey, "x+,x+")));

  SUBCASE("agrees with the honeycomb step table for k <= 5") {
    for (int k = 1; k <= 5; ++k) {
      const Membership member(spec(honey, k, kind::CyclicCategories{}));
      for (const auto& w : oracle::all_words(6, k)) {
        CHECK(member(testing::from_ints(w).letters()) ==
              oracle::honeycomb_walk(w));
      }
    }
  }

  SUBCASE("three categories cycle in order from any start") {
    auto a = alternating_alphabet({1, 1, 1});  // A | B | C
    const auto s = spec(a, 4, kind::CyclicCategories{});
    CHECK(is_member(s, word(a, "ABCA")));
    CHECK(is_member(s, word(a, "CABC")));
    CHECK_FALSE(is_member(s, word(a, "ACBA")));
  }

  CHECK_THROWS_AS(is_member(spec(Alphabet::of_size(3), 2,
                                 kind::CyclicCategories{}),
                            Word{0, 1}),
                  std::invalid_argument);
}

TEST_CASE("lipschitz membership") {
  const auto a = Alphabet::of_size(7, true);
  const auto s = spec(a, 3, kind::Lipschitz{1});
  CHECK(is_member(s, word(a, "gab")));  // wraps g->a
  CHECK(is_member(s, word(a, "ddc")));
  CHECK_FALSE(is_member(s, word(a, "adc")));
  // No constraint between last and first letter.
  CHECK(is_member(s, word(a, "abc")));
  CHECK(is_member(spec(a, 4, kind::Lipschitz{1}), word(a, "abcd")));

  CHECK_THROWS_AS(validate(spec(Alphabet::of_size(5), 3, kind::Lipschitz{1})),
                  std::invalid_argument);
  const auto wide = spec(Alphabet::of_size(4, true), 3, kind::Lipschitz{2});
  CHECK(validate(wide).size() == 1);
  CHECK(count(wide) == 64);
}

TEST_CASE("augmented onto membership") {
  const auto a = Alphabet::of_size(3);
  const auto s = spec(a, 4, kind::AugmentedOnto{1, 2});
  CHECK(is_member(s, word(a, "aabc")));
  CHECK_FALSE(is_member(s, word(a, "aaab")));
  CHECK_THROWS_AS(validate(spec(a, 4, kind::AugmentedOnto{2, 2})),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate(spec(a, 4, kind::AugmentedOnto{0, 2})),
                  std::invalid_argument);
}

TEST_CASE("lattice membership") {
  const auto s = lattice_spec(2, 3, 3);
  CHECK(is_member(s, word(s.alphabet, "EEN")));
  CHECK(is_member(s, word(s.alphabet, "ENE")));
  const auto tight = lattice_spec(2, 1, 3);
  CHECK_FALSE(is_member(tight, word(s.alphabet, "EEN")));
  CHECK(is_member(tight, word(s.alphabet, "ENS")));
  CHECK_THROWS_AS(
      validate(spec(Alphabet::of_size(5), 3, kind::LatticePath{2, 1})),
      std::invalid_argument);
}

TEST_CASE("is_member rejects malformed words") {
  const auto s = spec(digits(2), 3, kind::AllWords{});
  CHECK_THROWS_AS(is_member(s, Word{0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(is_member(s, Word{0, 1, 2}), std::out_of_range);
  CHECK_THROWS_AS(validate(spec(digits(3), 3, kind::NearBalancedBinary{})),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate(spec(digits(3), 0, kind::AllWords{})),
                  std::invalid_argument);
}

TEST_CASE("enumerate and count") {
  CHECK(count(spec(digits(2), 4, kind::Monotone{})) == 14);
  CHECK(count(spec(digits(3), 3, kind::Monotone{})) == 24);
  CHECK(count(spec(digits(2), 3, kind::AllWords{})) == 8);
  // Frozen from a brute-force filter of 3^4 and 6^3 candidates.
  CHECK(count(spec(Alphabet::of_size(3), 4, kind::AugmentedOnto{1, 2})) == 36);
  CHECK(count(spec(honeycomb_alphabet(), 3, kind::CyclicCategories{})) == 54);

  SUBCASE("rank order, each member once") {
    const auto s = spec(digits(3), 4, kind::Monotone{});
    const auto words = enumerate(s);
    CHECK(std::is_sorted(words.begin(), words.end()));
    CHECK(std::adjacent_find(words.begin(), words.end()) == words.end());
    const auto ranks = member_ranks(s);
    REQUIRE(ranks.size() == words.size());
    for (std::size_t i = 0; i < ranks.size(); ++i) {
      CHECK(unrank(ranks[i], 4, 3) == words[i]);
    }
  }

  SUBCASE("budget") {
    EnumerationOptions tight{80};
    const auto s = spec(digits(3), 4, kind::AllWords{});
    CHECK_THROWS_AS(count(s, tight), BudgetExceeded);
    try {
      count(s, tight);
    } catch (const BudgetExceeded& e) {
      CHECK(e.required() == 81);
      CHECK(e.budget() == 80);
    }
    CHECK(count(s, EnumerationOptions{81}) == 81);
    const auto huge = spec(Alphabet::of_size(26), 20, kind::AllWords{});
    CHECK_THROWS_AS(count(huge), BudgetExceeded);
  }
}

TEST_CASE("injective and onto counts match closed forms") {
  for (int n = 1; n <= 4; ++n) {
    for (int k = 1; k <= 7; ++k) {
      const auto a = Alphabet::of_size(n);
      const Rank inj = count(spec(a, k, kind::Injective{}));
      CHECK(inj == (k <= n ? oracle::falling_factorial(n, k) : 0));
      const Rank onto = count(spec(a, k, kind::Onto{}));
      CHECK(onto == static_cast<Rank>(oracle::surjections(n, k)));
    }
  }
}

TEST_CASE("equitable and near-balanced") {
  for (int n = 1; n <= 4; ++n) {
    for (int k = 1; k <= 6; ++k) {
      const auto s = spec(Alphabet::of_size(n), k, kind::Equitable{});
      const Membership member(s);
      for (const auto& w : oracle::all_words(n, k)) {
        const auto c = oracle::counts(w, n);
        const bool expected = std::all_of(c.begin(), c.end(), [&](int x) {
          return x == k / n || x == (k + n - 1) / n;
        });
        CHECK(member(testing::from_ints(w).letters()) == expected);
      }
      if (k < n) {
        CHECK(count(s) == count(spec(Alphabet::of_size(n), k,
                                     kind::Injective{})));
      }
    }
  }
  for (int k = 1; k <= 8; ++k) {
    const auto nb = spec(digits(2), k, kind::NearBalancedBinary{});
    const Membership member(nb);
    for (const auto& w : oracle::all_words(2, k)) {
      const int zeros = oracle::counts(w, 2)[0];
      const bool expected = k % 2 == 1
                                ? (zeros == (k + 1) / 2 || zeros == k / 2)
                                : zeros == k / 2;
      CHECK(member(testing::from_ints(w).letters()) == expected);
    }
    CHECK(member_ranks(nb) ==
          member_ranks(spec(digits(2), k, kind::Equitable{})));
  }
  const auto nb3 = spec(digits(2), 3, kind::NearBalancedBinary{});
  CHECK(count(nb3) == 6);
}

TEST_CASE("augmented onto counts are invariant under symbol permutation") {
  std::mt19937 rng(12345);
  for (std::size_t n : {3u, 4u}) {
    for (std::size_t k = n; k <= 2 * n; ++k) {
      const auto base = spec(Alphabet::of_size(n), k, kind::AugmentedOnto{1, 2});
      const auto words = enumerate(base);
      for (int trial = 0; trial < 5; ++trial) {
        std::vector<Letter> perm(n);
        std::iota(perm.begin(), perm.end(), Letter{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        std::size_t permuted_members = 0;
        for (const auto& s : oracle::all_words(int(n), int(k))) {
          std::vector<Letter> p;
          for (int x : s) {
            p.push_back(perm[x]);
          }
          permuted_members += is_member(base, Word(p));
        }
        CHECK(permuted_members == words.size());
      }
    }
  }
}

TEST_CASE("existence claims") {
  const auto a3 = Alphabet::of_size(3);
  CHECK(existence_claim(spec(a3, 3, kind::Monotone{})) ==
        ExistenceClaim{V::ClaimedExists, "monotone"});
  CHECK(existence_claim(spec(digits(2), 4, kind::Equitable{})).verdict ==
        V::ClaimedNotExists);
  CHECK(existence_claim(spec(a3, 4, kind::Equitable{})).verdict ==
        V::ClaimedExists);
  CHECK(existence_claim(lattice_spec(2, 1, 2)).verdict == V::Unstated);
  CHECK(existence_claim(lattice_spec(2, 3, 3)) ==
        ExistenceClaim{V::ClaimedExists, "de-bruijn"});
  CHECK(existence_claim(lattice_spec(3, 3, 4)) ==
        ExistenceClaim{V::ClaimedExists, "lattice-3d"});
  CHECK(existence_claim(lattice_spec(3, 2, 4)).verdict == V::Unstated);
  CHECK(existence_claim(lattice_spec(4, 3, 5)).verdict == V::Unstated);

  CHECK(existence_claim(spec(digits(2), 3, kind::NearBalancedBinary{})).verdict ==
        V::ClaimedExists);
  CHECK(existence_claim(spec(digits(2), 4, kind::NearBalancedBinary{})).verdict ==
        V::ClaimedNotExists);
  CHECK(existence_claim(spec(a3, 2, kind::Injective{})).verdict ==
        V::ClaimedExists);
  CHECK(existence_claim(spec(a3, 3, kind::Injective{})).verdict ==
        V::ClaimedNotExists);
  CHECK(existence_claim(spec(a3, 4, kind::Onto{})).verdict == V::ClaimedExists);
  CHECK(existence_claim(spec(a3, 3, kind::Onto{})).verdict ==
        V::ClaimedNotExists);

  SUBCASE("augmented onto ranges") {
    for (std::size_t k = 1; k <= 8; ++k) {
      const auto c = existence_claim(spec(a3, k, kind::AugmentedOnto{1, 2}));
      CHECK((c.verdict == V::ClaimedExists) == (k >= 4 && k <= 5));
    }
    const auto a2 = Alphabet::of_size(2);
    for (std::size_t k = 1; k <= 8; ++k) {
      const auto c = existence_claim(spec(a2, k, kind::AugmentedOnto{2, 3}));
      CHECK((c.verdict == V::ClaimedExists) == (k == 5));
      if (k == 5) {
        CHECK(c.basis == "augmented-onto");
      }
    }
  }

  SUBCASE("cyclic categories") {
    const auto unequal = alternating_alphabet({2, 3});
    CHECK(existence_claim(spec(unequal, 4, kind::CyclicCategories{})).basis ==
          "cyclic-categories");
    CHECK(existence_claim(spec(unequal, 2, kind::CyclicCategories{})).basis ==
          "alternating");
    CHECK(existence_claim(spec(unequal, 5, kind::CyclicCategories{})).verdict ==
          V::Unstated);
    const auto equal = alternating_alphabet({2, 2});
    CHECK(existence_claim(spec(equal, 5, kind::CyclicCategories{})).basis ==
          "alternating");
    const auto three = alternating_alphabet({2, 2, 2});
    CHECK(existence_claim(spec(three, 5, kind::CyclicCategories{})).verdict ==
          V::ClaimedExists);
    CHECK(existence_claim(spec(three, 6, kind::CyclicCategories{})).verdict ==
          V::Unstated);
    CHECK(existence_claim(spec(three, 8, kind::CyclicCategories{})).verdict ==
          V::ClaimedExists);
    CHECK(existence_claim(spec(honeycomb_alphabet(), 5,
                               kind::CyclicCategories{})) ==
          ExistenceClaim{V::ClaimedExists, "honeycomb"});
  }
}
