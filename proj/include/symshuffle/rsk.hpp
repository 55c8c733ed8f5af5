#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symshuffle/permutation.hpp"
#include "symshuffle/rational.hpp"
#include "symshuffle/tableau.hpp"

namespace symshuffle {

// Insertion variants.  All three share one row-insertion engine; they differ
// only in the letter order and in which letters bump an equal entry.
//   standard: integer order, no letter bumps an equal letter.
//   type_c:   1 < -1 < 2 < -2 < ..., negative letters bump an equal letter.
//   brkv:     integer order, negative letters bump an equal letter.
enum class RskVariant { standard, type_c, brkv };

std::string to_string(RskVariant v);
RskVariant parse_rsk_variant(std::string_view name);

// Sort key of a letter under the variant's order.
long letter_key(RskVariant v, int letter);
// True when the letter must bump an equal entry (a row-strict letter).
bool bumps_equal(RskVariant v, int letter);
// True when the letter belongs to the variant's alphabet.
bool letter_allowed(RskVariant v, int letter);

using Word = std::vector<int>;

Word parse_word(std::string_view text);
std::string word_to_string(const Word& w);

struct RskPair {
  Tableau P;  // insertion
  Tableau Q;  // recording, standard on 1..n

  friend bool operator==(const RskPair&, const RskPair&) = default;
};

// Throws std::invalid_argument on a letter outside the variant's alphabet.
RskPair rsk(const Word& word, RskVariant variant);
RskPair rsk(const Permutation& w);

// P-tableau conditions for the variant: weak increase along rows and columns
// under the variant order, bumping-equal letters at most once per row, the
// other letters at most once per column.
bool valid_insertion_tableau(const Tableau& P, RskVariant variant);

// Inverse bumping.  Throws std::invalid_argument when the pair violates the
// variant's conditions (shape mismatch, Q not standard, bad P).
Word rsk_inverse(const RskPair& pair, RskVariant variant);

// Word -> permutation constructions.
//   riffle: positive letters; each letter's block of values placed left to right.
//   signed: +-1..+-k under 1 < -1 < 2 < ...; negative blocks placed in decreasing order.
//   abg:    integers; negatives (smallest first, decreasing), then the zero
//           block as all r! orders with weight 1/r!, then positives (increasing).
enum class WordScheme { riffle, signed_, abg };

std::string to_string(WordScheme s);
WordScheme parse_word_scheme(std::string_view name);

// The matching insertion variant whose recording tableau equals that of the
// resulting permutation (abg: only for zero-free words).
RskVariant scheme_variant(WordScheme s);

struct WeightedPermutation {
  Permutation perm;
  Rational weight;
};

std::vector<WeightedPermutation> word_to_permutations(const Word& word, WordScheme scheme);
// Deterministic schemes only (riffle, signed, or an abg word with at most one zero).
Permutation word_to_permutation(const Word& word, WordScheme scheme);

}  // namespace symshuffle
