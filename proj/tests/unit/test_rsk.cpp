#include <doctest.h>

#include <set>

#include "../oracles.hpp"
#include "symshuffle/rsk.hpp"

using namespace symshuffle;

namespace {
Tableau rows(std::vector<std::vector<int>> r) { return Tableau(std::move(r)); }
}  // namespace

TEST_CASE("signed insertion example") {
  const auto pair = rsk(parse_word("1 -1 2 -2 1 1 -1 1 2 2 -1 2 -2"), RskVariant::type_c);
  CHECK(pair.P == rows({{1, 1, 1, 1, -1, 2, 2, -2}, {-1, 2, 2}, {-1, -2}}));
  CHECK(pair.Q == rows({{1, 2, 3, 4, 9, 10, 12, 13}, {5, 6, 7}, {8, 11}}));
}

TEST_CASE("zero-free abg insertion example") {
  const auto pair = rsk(parse_word("1 -1 2 -2 1 1 -2"), RskVariant::brkv);
  CHECK(pair.P == rows({{-2, 1, 1}, {-2, 2}, {-1}, {1}}));
  CHECK(pair.Q == rows({{1, 3, 6}, {2, 5}, {4}, {7}}));
}

TEST_CASE("standard insertion") {
  for (int n = 1; n <= 6; ++n) {
    const auto pair = rsk(Permutation::identity(n));
    CHECK(pair.P == pair.Q);
    CHECK(pair.P.row_count() == 1);
  }
  std::set<std::pair<Tableau, Tableau>> pairs;
  for (const auto& w : all_permutations(4)) {
    const auto pair = rsk(w);
    pairs.emplace(pair.P, pair.Q);
    CHECK(pair.Q.rows() == oracle::recording(w.images()));
    CHECK(rsk(w.inverse()).P == pair.Q);
    CHECK(rsk_inverse(pair, RskVariant::standard) == w.images());
  }
  CHECK(pairs.size() == 24);
  const auto single = rsk(Word{-3}, RskVariant::type_c);
  CHECK(single.P.size() == 1);
  CHECK(single.Q == rows({{1}}));
}

TEST_CASE("insertion round trips") {
  for (const auto& [variant, letters] :
       std::vector<std::pair<RskVariant, std::vector<int>>>{{RskVariant::type_c, {1, -1, 2, -2}},
                                                            {RskVariant::brkv, {1, -1, 2, -2}},
                                                            {RskVariant::standard, {1, 2, 3}}}) {
    for (int n = 1; n <= 4; ++n) {
      std::set<RskPair, decltype([](const RskPair& a, const RskPair& b) {
                 return std::tie(a.P, a.Q) < std::tie(b.P, b.Q);
               })>
          seen;
      const auto words = oracle::words(letters, n);
      for (const auto& w : words) {
        const auto pair = rsk(w, variant);
        CHECK(pair.Q.is_standard());
        CHECK(valid_insertion_tableau(pair.P, variant));
        CHECK(rsk_inverse(pair, variant) == w);
        seen.insert(pair);
      }
      CHECK(seen.size() == words.size());
    }
  }
}

TEST_CASE("words to permutations") {
  CHECK(word_to_permutation(parse_word("1 3 2 1 2 2 1 3 1 2"), WordScheme::riffle) ==
        Permutation::parse("1 9 5 2 6 7 3 10 4 8"));
  CHECK(word_to_permutation(parse_word("1 -1 2 -2 1 1 -1 1 2 2 -1 2 -2"), WordScheme::signed_) ==
        Permutation::parse("1 7 8 13 2 3 6 4 9 10 5 11 12"));
  const auto abg = word_to_permutations(parse_word("-2 0 1 0 0 2 -1 -2 -1 1"), WordScheme::abg);
  CHECK(abg.size() == 6);
  bool found = false;
  for (const auto& wp : abg) {
    CHECK(wp.weight == Rational(1, 6));
    found = found || wp.perm == Permutation::parse("2 5 8 6 7 10 4 1 3 9");
  }
  CHECK(found);
  // Agreement with the independent word-to-permutation oracle.
  for (const auto& w : oracle::words({-2, -1, 0, 1, 2}, 4)) {
    std::map<oracle::Perm, Rational> mine, theirs;
    for (const auto& wp : word_to_permutations(w, WordScheme::abg)) mine[wp.perm.images()] += wp.weight;
    for (const auto& [perm, weight] : oracle::word_perms(w, oracle::Scheme::abg)) theirs[perm] += weight;
    CHECK(mine == theirs);
  }
}

TEST_CASE("recording tableau equals Q of the permutation") {
  for (const auto& w : oracle::words({1, -1, 2, -2}, 5)) {
    const auto perm = word_to_permutation(w, WordScheme::signed_);
    CHECK(rsk(w, RskVariant::type_c).Q == rsk(perm).Q);
  }
}
