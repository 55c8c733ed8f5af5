#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "symshuffle/permutation.hpp"
#include "symshuffle/rational.hpp"
#include "symshuffle/rsk.hpp"
#include "symshuffle/symfunc.hpp"

namespace symshuffle {

inline constexpr double kMaxEnumeratedWords = 1e7;

struct BiasedRiffle {
  std::vector<Rational> q;
  friend bool operator==(const BiasedRiffle&, const BiasedRiffle&) = default;
};
struct TypeCShuffle {
  std::vector<Rational> y;
  friend bool operator==(const TypeCShuffle&, const TypeCShuffle&) = default;
};
struct AbgShuffle {
  ParamVector params;
  friend bool operator==(const AbgShuffle&, const AbgShuffle&) = default;
};
struct MuShuffle {
  std::vector<int> mu;  // composition; parts must sum to n at use time
  friend bool operator==(const MuShuffle&, const MuShuffle&) = default;
};
struct TopToRandom {
  int iterations = 1;
  friend bool operator==(const TopToRandom&, const TopToRandom&) = default;
};

using ShuffleModel = std::variant<BiasedRiffle, TypeCShuffle, AbgShuffle, MuShuffle, TopToRandom>;

/// One of the shuffle models plus the "deal from the bottom" flag.
struct ShuffleSpec {
  ShuffleModel model;
  bool reversed = false;

  static ShuffleSpec biased_riffle(std::vector<Rational> q, bool reversed = false);
  // GSR k-riffle: q = (1/k, ..., 1/k).
  static ShuffleSpec riffle(int k, bool reversed = false);
  static ShuffleSpec type_c(std::vector<Rational> y, bool reversed = false);
  static ShuffleSpec abg(ParamVector p, bool reversed = false);
  static ShuffleSpec mu(std::vector<int> composition, bool reversed = false);
  static ShuffleSpec top_to_random(int iterations, bool reversed = false);

  std::string kind_name() const;
  std::string to_string() const;
  // Throws std::invalid_argument when the parameters break the model's
  // invariants (or mu does not sum to n, when n >= 0 is given).
  void validate(int n = -1) const;

  friend bool operator==(const ShuffleSpec&, const ShuffleSpec&) = default;
};

/// Exact probability distribution on S_n keyed by permutation.
class PermDistribution {
 public:
  explicit PermDistribution(int n = 0) : n_(n) {}
  static PermDistribution point_mass(const Permutation& w);
  static PermDistribution uniform(int n);

  int n() const { return n_; }
  const std::map<Permutation, Rational>& weights() const& { return weights_; }
  const std::map<Permutation, Rational>& weights() const&& = delete;
  std::size_t support_size() const { return weights_.size(); }

  void add(const Permutation& w, const Rational& weight);
  Rational mass(const Permutation& w) const;
  Rational total() const;
  bool nonnegative() const;

  // Post-compose every permutation with value reversal.
  PermDistribution reversed() const;

  template <class Key, class F>
  std::map<Key, Rational> marginal(F&& key_of) const {
    std::map<Key, Rational> out;
    for (const auto& [w, p] : weights_) out[key_of(w)] += p;
    return out;
  }

  friend bool operator==(const PermDistribution&, const PermDistribution&) = default;

 private:
  int n_;
  std::map<Permutation, Rational> weights_;
};

struct LetterProbability {
  int letter;
  Rational probability;
};

// Letters with nonzero probability and the word scheme for word-based models.
// Throws Unsupported for mu / top-to-random.
std::vector<LetterProbability> model_alphabet(const ShuffleSpec& spec);
WordScheme model_scheme(const ShuffleSpec& spec);

// Word-enumeration kernels.  Both return identical distributions; the serial
// one is the reference.
PermDistribution enumerate_word_distribution(std::span<const LetterProbability> alphabet, int n,
                                             WordScheme scheme);
PermDistribution enumerate_word_distribution_serial(std::span<const LetterProbability> alphabet,
                                                    int n, WordScheme scheme);

// Probability that k balls dropped uniformly into n boxes occupy exactly j boxes.
Rational occupied_boxes_probability(int j, int k, int n);

// Exact distribution by word enumeration.  Throws GuardExceeded past
// kMaxEnumeratedWords words, std::invalid_argument on a malformed spec.
PermDistribution exact_distribution(const ShuffleSpec& spec, int n);
PermDistribution exact_distribution_serial(const ShuffleSpec& spec, int n);

inline constexpr int kSampleStreams = 16;

// Word-based sampler.  Work is split into kSampleStreams fixed streams seeded
// from (seed, stream index) and concatenated in stream order, so the output
// does not depend on the thread count.
std::vector<Permutation> sample(const ShuffleSpec& spec, int n, std::uint64_t seed,
                                std::size_t count);

// Pile-based sampler for `iterations` successive (alpha, beta, gamma) shuffles:
// cut into piles labelled by tuples, flip negative piles, mix piles with a
// zero coordinate, riffle.  Independent of the word construction.
std::vector<Permutation> sample_piles(const ParamVector& p, int n, int iterations,
                                      std::uint64_t seed, std::size_t count);

// Strict pile order on label tuples used by sample_piles.
bool pile_label_less(std::span<const int> a, std::span<const int> b);

// convolve(a, b)[x ∘ y] += a[x] b[y].
PermDistribution convolve(const PermDistribution& a, const PermDistribution& b);
PermDistribution convolve_serial(const PermDistribution& a, const PermDistribution& b);

// k-fold convolution of exact_distribution(spec, n); k = 0 is the identity.
PermDistribution iterate(const ShuffleSpec& spec, int k, int n);

// max over pi in S_n of 1 - n! d(pi).
Rational separation_distance(const PermDistribution& d);

// C(n,2) [sum alpha^2 + sum beta^2]^k.
Rational mybound(const ParamVector& p, int k, int n);

}  // namespace symshuffle
