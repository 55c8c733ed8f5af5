#include "symshuffle/rsk.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace symshuffle {

std::string to_string(RskVariant v) {
  switch (v) {
    case RskVariant::standard: return "standard";
    case RskVariant::type_c: return "typeC";
    case RskVariant::brkv: return "brkv";
  }
  return "?";
}

RskVariant parse_rsk_variant(std::string_view name) {
  for (auto v : {RskVariant::standard, RskVariant::type_c, RskVariant::brkv}) {
    if (to_string(v) == name) return v;
  }
  throw std::invalid_argument("unknown RSK variant: " + std::string(name));
}

long letter_key(RskVariant v, int letter) {
  if (v == RskVariant::type_c) {
    // 1 < -1 < 2 < -2 < ...
    const long a = letter < 0 ? -static_cast<long>(letter) : letter;
    return 2 * a - (letter > 0 ? 1 : 0);
  }
  return letter;
}

bool bumps_equal(RskVariant v, int letter) { return v != RskVariant::standard && letter < 0; }

bool letter_allowed(RskVariant v, int letter) { return v == RskVariant::standard || letter != 0; }

Word parse_word(std::string_view text) {
  std::istringstream is{std::string(text)};
  Word w;
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    int x = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("bad letter: " + tok);
    w.push_back(x);
  }
  return w;
}

std::string word_to_string(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(w[i]);
  }
  return s;
}

namespace {

// Position in a key-sorted row where `letter` lands: first entry strictly
// greater, or first entry greater-or-equal for self-bumping letters.
std::size_t insertion_slot(const Tableau::Row& row, int letter, RskVariant v) {
  const long key = letter_key(v, letter);
  auto cmp_key = [v](int entry) { return letter_key(v, entry); };
  if (bumps_equal(v, letter)) {
    return static_cast<std::size_t>(
        std::partition_point(row.begin(), row.end(), [&](int e) { return cmp_key(e) < key; }) -
        row.begin());
  }
  return static_cast<std::size_t>(
      std::partition_point(row.begin(), row.end(), [&](int e) { return cmp_key(e) <= key; }) -
      row.begin());
}

}  // namespace

RskPair rsk(const Word& word, RskVariant variant) {
  std::vector<Tableau::Row> P;
  std::vector<Tableau::Row> Q;
  for (std::size_t step = 0; step < word.size(); ++step) {
    int x = word[step];
    if (!letter_allowed(variant, x)) {
      throw std::invalid_argument("letter " + std::to_string(x) + " not in the " +
                                  to_string(variant) + " alphabet");
    }
    std::size_t r = 0;
    while (true) {
      if (r == P.size()) {
        P.push_back({x});
        Q.push_back({static_cast<int>(step) + 1});
        break;
      }
      auto& row = P[r];
      std::size_t slot = insertion_slot(row, x, variant);
      if (slot == row.size()) {
        row.push_back(x);
        Q[r].push_back(static_cast<int>(step) + 1);
        break;
      }
      std::swap(x, row[slot]);
      ++r;
    }
  }
  return {Tableau(std::move(P)), Tableau(std::move(Q))};
}

RskPair rsk(const Permutation& w) { return rsk(w.images(), RskVariant::standard); }

bool valid_insertion_tableau(const Tableau& P, RskVariant variant) {
  const auto& rows = P.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      const int e = rows[i][j];
      if (!letter_allowed(variant, e)) return false;
      const long k = letter_key(variant, e);
      if (j > 0) {
        const int left = rows[i][j - 1];
        const long lk = letter_key(variant, left);
        if (lk > k) return false;
        if (lk == k && bumps_equal(variant, e)) return false;
      }
      if (i > 0) {
        const int up = rows[i - 1][j];
        const long uk = letter_key(variant, up);
        if (uk > k) return false;
        if (uk == k && !bumps_equal(variant, e)) return false;
      }
    }
  }
  return true;
}

Word rsk_inverse(const RskPair& pair, RskVariant variant) {
  if (!(pair.P.shape() == pair.Q.shape())) throw std::invalid_argument("P and Q shapes differ");
  if (!pair.Q.is_standard()) throw std::invalid_argument("recording tableau is not standard");
  if (!valid_insertion_tableau(pair.P, variant)) {
    throw std::invalid_argument("insertion tableau violates the " + to_string(variant) + " conditions");
  }
  auto P = pair.P.rows();
  auto Q = pair.Q.rows();
  const int n = pair.Q.size();
  Word word(static_cast<std::size_t>(n));
  for (int step = n; step >= 1; --step) {
    std::size_t r = 0;
    while (Q[r].back() != step) ++r;
    int x = P[r].back();
    P[r].pop_back();
    Q[r].pop_back();
    if (P[r].empty()) {
      P.pop_back();
      Q.pop_back();
    }
    while (r > 0) {
      --r;
      auto& row = P[r];
      // The bumper is the rightmost entry below x, or equal to x when x bumps
      // equal letters.
      const long key = letter_key(variant, x);
      const bool weak = bumps_equal(variant, x);
      auto it = std::partition_point(row.begin(), row.end(), [&](int e) {
        const long ek = letter_key(variant, e);
        return weak ? ek <= key : ek < key;
      });
      if (it == row.begin()) throw std::invalid_argument("inconsistent tableau pair");
      --it;
      std::swap(x, *it);
    }
    word[static_cast<std::size_t>(step - 1)] = x;
  }
  return word;
}

std::string to_string(WordScheme s) {
  switch (s) {
    case WordScheme::riffle: return "riffle";
    case WordScheme::signed_: return "signed";
    case WordScheme::abg: return "abg";
  }
  return "?";
}

WordScheme parse_word_scheme(std::string_view name) {
  for (auto s : {WordScheme::riffle, WordScheme::signed_, WordScheme::abg}) {
    if (to_string(s) == name) return s;
  }
  throw std::invalid_argument("unknown word scheme: " + std::string(name));
}

RskVariant scheme_variant(WordScheme s) {
  switch (s) {
    case WordScheme::riffle: return RskVariant::standard;
    case WordScheme::signed_: return RskVariant::type_c;
    case WordScheme::abg: return RskVariant::brkv;
  }
  return RskVariant::standard;
}

namespace {

// Block order key for each scheme: blocks receive consecutive values in
// increasing key order.
long block_key(WordScheme s, int letter) {
  switch (s) {
    case WordScheme::riffle: return letter;
    case WordScheme::signed_: return letter_key(RskVariant::type_c, letter);
    case WordScheme::abg: return letter;
  }
  return letter;
}

void check_scheme_letter(WordScheme s, int letter) {
  bool ok = s == WordScheme::riffle ? letter > 0 : s == WordScheme::signed_ ? letter != 0 : true;
  if (!ok) {
    throw std::invalid_argument("letter " + std::to_string(letter) + " not allowed in the " +
                                to_string(s) + " scheme");
  }
}

}  // namespace

std::vector<WeightedPermutation> word_to_permutations(const Word& word, WordScheme scheme) {
  std::map<long, std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < word.size(); ++i) {
    check_scheme_letter(scheme, word[i]);
    blocks[block_key(scheme, word[i])].push_back(i);
  }
  std::vector<int> images(word.size(), 0);
  std::vector<std::size_t> zero_positions;
  int zero_base = 0;
  int next = 1;
  for (const auto& [key, positions] : blocks) {
    const int letter = word[positions.front()];
    const bool decreasing = letter < 0;
    if (scheme == WordScheme::abg && letter == 0) {
      zero_positions = positions;
      zero_base = next;
      next += static_cast<int>(positions.size());
      continue;
    }
    const int m = static_cast<int>(positions.size());
    for (int t = 0; t < m; ++t) {
      images[positions[static_cast<std::size_t>(t)]] = decreasing ? next + m - 1 - t : next + t;
    }
    next += m;
  }

  std::vector<WeightedPermutation> out;
  if (zero_positions.empty()) {
    out.push_back({Permutation(images), Rational(1)});
    return out;
  }
  const int r = static_cast<int>(zero_positions.size());
  const Rational weight = Rational(1) / Rational(factorial(static_cast<unsigned>(r)));
  std::vector<int> order(static_cast<std::size_t>(r));
  std::iota(order.begin(), order.end(), zero_base);
  do {
    for (int t = 0; t < r; ++t) images[zero_positions[static_cast<std::size_t>(t)]] = order[static_cast<std::size_t>(t)];
    out.push_back({Permutation(images), weight});
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

Permutation word_to_permutation(const Word& word, WordScheme scheme) {
  auto perms = word_to_permutations(word, scheme);
  if (perms.size() != 1) throw std::invalid_argument("word maps to a distribution, not one permutation");
  return perms.front().perm;
}

}  // namespace symshuffle
