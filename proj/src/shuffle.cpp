#include "symshuffle/shuffle.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "symshuffle/errors.hpp"
#include "symshuffle/parallel.hpp"

namespace symshuffle {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string join(const std::vector<Rational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s;
}

void check_probability_vector(const std::vector<Rational>& v, const char* what) {
  Rational sum = 0;
  for (const auto& x : v) {
    if (x < 0) throw std::invalid_argument(std::string(what) + " has a negative entry");
    sum += x;
  }
  if (sum != 1) throw std::invalid_argument(std::string(what) + " must sum to 1");
}

}  // namespace

ShuffleSpec ShuffleSpec::biased_riffle(std::vector<Rational> q, bool reversed) {
  return {BiasedRiffle{std::move(q)}, reversed};
}

ShuffleSpec ShuffleSpec::riffle(int k, bool reversed) {
  if (k < 1) throw std::invalid_argument("riffle needs k >= 1 piles");
  return biased_riffle(std::vector<Rational>(static_cast<std::size_t>(k), Rational(1, k)), reversed);
}

ShuffleSpec ShuffleSpec::type_c(std::vector<Rational> y, bool reversed) {
  return {TypeCShuffle{std::move(y)}, reversed};
}

ShuffleSpec ShuffleSpec::abg(ParamVector p, bool reversed) { return {AbgShuffle{std::move(p)}, reversed}; }

ShuffleSpec ShuffleSpec::mu(std::vector<int> composition, bool reversed) {
  return {MuShuffle{std::move(composition)}, reversed};
}

ShuffleSpec ShuffleSpec::top_to_random(int iterations, bool reversed) {
  return {TopToRandom{iterations}, reversed};
}

std::string ShuffleSpec::kind_name() const {
  return std::visit(Overloaded{[](const BiasedRiffle&) { return std::string("biased-riffle"); },
                               [](const TypeCShuffle&) { return std::string("typeC"); },
                               [](const AbgShuffle&) { return std::string("abg"); },
                               [](const MuShuffle&) { return std::string("mu"); },
                               [](const TopToRandom&) { return std::string("top-to-random"); }},
                    model);
}

std::string ShuffleSpec::to_string() const {
  std::string body = std::visit(
      Overloaded{[](const BiasedRiffle& m) { return "biased-riffle(" + join(m.q) + ")"; },
                 [](const TypeCShuffle& m) { return "typeC(" + join(m.y) + ")"; },
                 [](const AbgShuffle& m) { return "abg" + m.params.to_string(); },
                 [](const MuShuffle& m) {
                   std::string s = "mu(";
                   for (std::size_t i = 0; i < m.mu.size(); ++i) s += (i ? "," : "") + std::to_string(m.mu[i]);
                   return s + ")";
                 },
                 [](const TopToRandom& m) { return "top-to-random(" + std::to_string(m.iterations) + ")"; }},
      model);
  return reversed ? body + "+reversed" : body;
}

void ShuffleSpec::validate(int n) const {
  std::visit(Overloaded{[](const BiasedRiffle& m) { check_probability_vector(m.q, "q"); },
                        [](const TypeCShuffle& m) { check_probability_vector(m.y, "y"); },
                        [](const AbgShuffle& m) {
                          if (!m.params.is_normalized()) {
                            throw std::invalid_argument("(alpha;beta;gamma) must be nonnegative and sum to 1");
                          }
                        },
                        [n](const MuShuffle& m) {
                          int s = 0;
                          for (int p : m.mu) {
                            if (p < 0) throw std::invalid_argument("mu parts must be nonnegative");
                            s += p;
                          }
                          if (n >= 0 && s != n) throw std::invalid_argument("mu parts must sum to n");
                        },
                        [](const TopToRandom& m) {
                          if (m.iterations < 0) throw std::invalid_argument("iteration count must be nonnegative");
                        }},
             model);
}

PermDistribution PermDistribution::point_mass(const Permutation& w) {
  PermDistribution d(w.size());
  d.add(w, 1);
  return d;
}

PermDistribution PermDistribution::uniform(int n) {
  PermDistribution d(n);
  const Rational p = Rational(1) / Rational(factorial(static_cast<unsigned>(n)));
  for (const auto& w : all_permutations(n)) d.add(w, p);
  return d;
}

void PermDistribution::add(const Permutation& w, const Rational& weight) {
  if (w.size() != n_) throw std::invalid_argument("permutation size does not match distribution");
  if (weight == 0) return;
  auto [it, inserted] = weights_.try_emplace(w, weight);
  if (!inserted) {
    it->second += weight;
    if (it->second == 0) weights_.erase(it);
  }
}

Rational PermDistribution::mass(const Permutation& w) const {
  auto it = weights_.find(w);
  return it == weights_.end() ? Rational(0) : it->second;
}

Rational PermDistribution::total() const {
  Rational t = 0;
  for (const auto& [w, p] : weights_) t += p;
  return t;
}

bool PermDistribution::nonnegative() const {
  return std::all_of(weights_.begin(), weights_.end(), [](const auto& kv) { return kv.second >= 0; });
}

PermDistribution PermDistribution::reversed() const {
  PermDistribution out(n_);
  for (const auto& [w, p] : weights_) out.add(w.complement(), p);
  return out;
}

std::vector<LetterProbability> model_alphabet(const ShuffleSpec& spec) {
  std::vector<LetterProbability> out;
  std::visit(Overloaded{[&](const BiasedRiffle& m) {
                          for (std::size_t i = 0; i < m.q.size(); ++i) {
                            if (m.q[i] != 0) out.push_back({static_cast<int>(i) + 1, m.q[i]});
                          }
                        },
                        [&](const TypeCShuffle& m) {
                          for (std::size_t i = 0; i < m.y.size(); ++i) {
                            if (m.y[i] == 0) continue;
                            const int letter = static_cast<int>(i) + 1;
                            out.push_back({letter, m.y[i] / 2});
                            out.push_back({-letter, m.y[i] / 2});
                          }
                        },
                        [&](const AbgShuffle& m) {
                          const auto& p = m.params;
                          for (std::size_t i = p.beta.size(); i-- > 0;) {
                            if (p.beta[i] != 0) out.push_back({-static_cast<int>(i) - 1, p.beta[i]});
                          }
                          if (p.gamma != 0) out.push_back({0, p.gamma});
                          for (std::size_t i = 0; i < p.alpha.size(); ++i) {
                            if (p.alpha[i] != 0) out.push_back({static_cast<int>(i) + 1, p.alpha[i]});
                          }
                        },
                        [](const MuShuffle&) { throw Unsupported("mu shuffles are not word-sampled"); },
                        [](const TopToRandom&) {
                          throw Unsupported("top-to-random is a mixture, not a word model");
                        }},
             spec.model);
  return out;
}

WordScheme model_scheme(const ShuffleSpec& spec) {
  if (std::holds_alternative<BiasedRiffle>(spec.model)) return WordScheme::riffle;
  if (std::holds_alternative<TypeCShuffle>(spec.model)) return WordScheme::signed_;
  if (std::holds_alternative<AbgShuffle>(spec.model)) return WordScheme::abg;
  throw Unsupported("model has no word scheme: " + spec.kind_name());
}

namespace {

std::uint64_t guarded_word_count(std::size_t alphabet, int n) {
  if (n < 0) throw std::invalid_argument("deck size must be nonnegative");
  if (std::pow(static_cast<double>(alphabet), n) > kMaxEnumeratedWords) {
    throw GuardExceeded("enumeration of " + std::to_string(alphabet) + "^" + std::to_string(n) +
                        " words exceeds the 10^7 guard; use sampling");
  }
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= alphabet;
  return total;
}

// Decode word index `idx` (base |alphabet|, least significant letter last)
// and return its probability.
Rational decode_word(std::uint64_t idx, std::span<const LetterProbability> alphabet, Word& word) {
  Rational weight = 1;
  const std::uint64_t base = alphabet.size();
  for (std::size_t pos = word.size(); pos-- > 0;) {
    const auto& lp = alphabet[idx % base];
    idx /= base;
    word[pos] = lp.letter;
    weight *= lp.probability;
  }
  return weight;
}

}  // namespace

PermDistribution enumerate_word_distribution_serial(std::span<const LetterProbability> alphabet,
                                                    int n, WordScheme scheme) {
  PermDistribution out(n);
  if (alphabet.empty()) {
    if (n == 0) out.add(Permutation(), 1);
    return out;
  }
  const std::uint64_t total = guarded_word_count(alphabet.size(), n);
  Word word(static_cast<std::size_t>(n));
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const Rational weight = decode_word(idx, alphabet, word);
    for (const auto& wp : word_to_permutations(word, scheme)) out.add(wp.perm, weight * wp.weight);
  }
  return out;
}

PermDistribution enumerate_word_distribution(std::span<const LetterProbability> alphabet, int n,
                                             WordScheme scheme) {
  if (alphabet.empty()) return enumerate_word_distribution_serial(alphabet, n, scheme);
  const std::uint64_t total = guarded_word_count(alphabet.size(), n);
  const int threads = parallel::max_threads();
  std::vector<std::unordered_map<Permutation, Rational>> partial(static_cast<std::size_t>(threads));
  const auto count = static_cast<std::int64_t>(total);

#pragma omp parallel
  {
    auto& local = partial[static_cast<std::size_t>(parallel::thread_index())];
    Word word(static_cast<std::size_t>(n));
#pragma omp for schedule(static)
    for (std::int64_t idx = 0; idx < count; ++idx) {
      const Rational weight = decode_word(static_cast<std::uint64_t>(idx), alphabet, word);
      for (const auto& wp : word_to_permutations(word, scheme)) local[wp.perm] += weight * wp.weight;
    }
  }

  // Exact sums: merge order does not affect the result.
  PermDistribution out(n);
  for (const auto& local : partial) {
    for (const auto& [w, p] : local) out.add(w, p);
  }
  return out;
}

Rational occupied_boxes_probability(int j, int k, int n) {
  if (n < 1 || k < 0 || j < 0 || j > n) return 0;
  // Inclusion-exclusion over boxes forced empty: exactly e = n - j empty boxes.
  const int e = n - j;
  Rational total = 0;
  for (int r = e; r <= n; ++r) {
    Rational term = Rational(binomial(n, r) * binomial(r, e));
    term *= pow(Rational(n - r) / n, static_cast<unsigned>(k));  // 0^0 = 1
    total += (r - e) % 2 == 0 ? term : Rational(-term);
  }
  return total;
}

namespace {

PermDistribution mu_distribution(const std::vector<int>& composition) {
  Word word;
  int letter = 0;
  for (int part : composition) {
    ++letter;
    word.insert(word.end(), static_cast<std::size_t>(part), letter);
  }
  const int n = static_cast<int>(word.size());
  PermDistribution out(n);
  const Rational weight = Rational(1) / Rational(multinomial(composition));
  do {
    out.add(word_to_permutation(word, WordScheme::riffle), weight);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

// j singleton piles on top of one block of n - j cards.
std::vector<int> top_block_composition(int j, int n) {
  std::vector<int> c(static_cast<std::size_t>(j), 1);
  if (n - j > 0) c.push_back(n - j);
  return c;
}

PermDistribution top_to_random_distribution(int k, int n) {
  PermDistribution out(n);
  for (int j = 0; j <= n; ++j) {
    const Rational pj = occupied_boxes_probability(j, k, n);
    if (pj == 0) continue;
    const PermDistribution block = mu_distribution(top_block_composition(j, n));
    for (const auto& [w, p] : block.weights()) out.add(w, pj * p);
  }
  return out;
}

PermDistribution exact_impl(const ShuffleSpec& spec, int n, bool parallel_kernel) {
  spec.validate(n);
  if (n < 0) throw std::invalid_argument("deck size must be nonnegative");
  PermDistribution d(n);
  if (const auto* m = std::get_if<MuShuffle>(&spec.model)) {
    d = mu_distribution(m->mu);
  } else if (const auto* t = std::get_if<TopToRandom>(&spec.model)) {
    d = top_to_random_distribution(t->iterations, n);
  } else {
    const auto alphabet = model_alphabet(spec);
    const auto scheme = model_scheme(spec);
    d = parallel_kernel ? enumerate_word_distribution(alphabet, n, scheme)
                        : enumerate_word_distribution_serial(alphabet, n, scheme);
  }
  return spec.reversed ? d.reversed() : d;
}

}  // namespace

PermDistribution exact_distribution(const ShuffleSpec& spec, int n) { return exact_impl(spec, n, true); }

PermDistribution exact_distribution_serial(const ShuffleSpec& spec, int n) {
  return exact_impl(spec, n, false);
}

// ---- sampling ----------------------------------------------------------------

namespace {

using Rng = std::mt19937_64;

Rng stream_rng(std::uint64_t seed, int stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32U),
                    static_cast<std::uint32_t>(stream), 0x5eedU};
  return Rng(seq);
}

class LetterSampler {
 public:
  explicit LetterSampler(std::span<const LetterProbability> alphabet) {
    double acc = 0;
    for (const auto& lp : alphabet) {
      acc += lp.probability.get_d();
      letters_.push_back(lp.letter);
      cumulative_.push_back(acc);
    }
  }
  int operator()(Rng& rng) const {
    std::uniform_real_distribution<double> u(0.0, cumulative_.back());
    const double x = u(rng);
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), x);
    if (it == cumulative_.end()) --it;
    return letters_[static_cast<std::size_t>(it - cumulative_.begin())];
  }

 private:
  std::vector<int> letters_;
  std::vector<double> cumulative_;
};

// Word -> permutation with the zero block randomized by the generator.
Permutation sample_word_permutation(const Word& word, WordScheme scheme, Rng& rng) {
  if (scheme != WordScheme::abg) return word_to_permutation(word, scheme);
  Word no_zero = word;
  std::vector<std::size_t> zeros;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] == 0) zeros.push_back(i);
  }
  if (zeros.size() <= 1) return word_to_permutation(word, scheme);
  // The zero block receives consecutive values; randomize them in place.
  auto base = word_to_permutations(word, scheme).front().perm.images();
  std::vector<int> values;
  for (auto z : zeros) values.push_back(base[z]);
  std::shuffle(values.begin(), values.end(), rng);
  for (std::size_t t = 0; t < zeros.size(); ++t) base[zeros[t]] = values[t];
  return Permutation(std::move(base));
}

Permutation sample_one(const ShuffleSpec& spec, int n, const LetterSampler* letters, Rng& rng) {
  Permutation w;
  if (const auto* m = std::get_if<MuShuffle>(&spec.model)) {
    Word word;
    int letter = 0;
    for (int part : m->mu) {
      ++letter;
      word.insert(word.end(), static_cast<std::size_t>(part), letter);
    }
    std::shuffle(word.begin(), word.end(), rng);
    w = word_to_permutation(word, WordScheme::riffle);
  } else if (const auto* t = std::get_if<TopToRandom>(&spec.model)) {
    std::vector<int> deck(static_cast<std::size_t>(n));
    std::iota(deck.begin(), deck.end(), 1);
    std::uniform_int_distribution<int> pos(0, n - 1);
    for (int step = 0; step < t->iterations && n > 0; ++step) {
      const int card = deck.front();
      deck.erase(deck.begin());
      deck.insert(deck.begin() + pos(rng), card);
    }
    w = Permutation(std::move(deck));
  } else {
    Word word(static_cast<std::size_t>(n));
    for (auto& l : word) l = (*letters)(rng);
    w = sample_word_permutation(word, model_scheme(spec), rng);
  }
  return spec.reversed ? w.complement() : w;
}

std::vector<std::size_t> stream_counts(std::size_t count) {
  std::vector<std::size_t> counts(kSampleStreams, count / kSampleStreams);
  for (std::size_t s = 0; s < count % kSampleStreams; ++s) ++counts[s];
  return counts;
}

}  // namespace

std::vector<Permutation> sample(const ShuffleSpec& spec, int n, std::uint64_t seed, std::size_t count) {
  if (count == 0) throw std::invalid_argument("sample count must be at least 1");
  spec.validate(n);
  std::unique_ptr<LetterSampler> letters;
  if (!std::holds_alternative<MuShuffle>(spec.model) && !std::holds_alternative<TopToRandom>(spec.model)) {
    letters = std::make_unique<LetterSampler>(model_alphabet(spec));
  }
  const auto counts = stream_counts(count);
  std::vector<std::vector<Permutation>> streams(kSampleStreams);

#pragma omp parallel for schedule(dynamic, 1)
  for (int s = 0; s < kSampleStreams; ++s) {
    Rng rng = stream_rng(seed, s);
    auto& out = streams[static_cast<std::size_t>(s)];
    out.reserve(counts[static_cast<std::size_t>(s)]);
    for (std::size_t i = 0; i < counts[static_cast<std::size_t>(s)]; ++i) {
      out.push_back(sample_one(spec, n, letters.get(), rng));
    }
  }

  std::vector<Permutation> all;
  all.reserve(count);
  for (auto& s : streams) all.insert(all.end(), std::make_move_iterator(s.begin()), std::make_move_iterator(s.end()));
  return all;
}

bool pile_label_less(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) throw std::invalid_argument("pile labels of different lengths");
  if (a.empty()) return false;
  if (a[0] != b[0]) return a[0] < b[0];
  if (a[0] >= 0) return pile_label_less(a.subspan(1), b.subspan(1));
  return pile_label_less(b.subspan(1), a.subspan(1));
}

std::vector<Permutation> sample_piles(const ParamVector& p, int n, int iterations, std::uint64_t seed,
                                      std::size_t count) {
  if (!p.is_normalized()) throw std::invalid_argument("(alpha;beta;gamma) must be normalized");
  if (iterations < 1) throw std::invalid_argument("need at least one iteration");
  if (count == 0) throw std::invalid_argument("sample count must be at least 1");
  const LetterSampler letters(model_alphabet(ShuffleSpec::abg(p)));
  const auto counts = stream_counts(count);
  std::vector<std::vector<Permutation>> streams(kSampleStreams);
  const auto k = static_cast<std::size_t>(iterations);

#pragma omp parallel for schedule(dynamic, 1)
  for (int s = 0; s < kSampleStreams; ++s) {
    Rng rng = stream_rng(seed ^ 0x9e3779b97f4a7c15ULL, s);
    auto& out = streams[static_cast<std::size_t>(s)];
    for (std::size_t rep = 0; rep < counts[static_cast<std::size_t>(s)]; ++rep) {
      // Pile sizes: one label tuple per card, counted.
      std::vector<std::vector<int>> labels(static_cast<std::size_t>(n), std::vector<int>(k));
      for (auto& l : labels) {
        for (auto& z : l) z = letters(rng);
      }
      std::sort(labels.begin(), labels.end(),
                [](const std::vector<int>& a, const std::vector<int>& b) { return pile_label_less(a, b); });
      // Top cards go to the smallest pile label; cards are 1..n from the top.
      std::vector<std::vector<int>> piles;
      for (std::size_t c = 0; c < labels.size(); ++c) {
        if (c == 0 || pile_label_less(labels[c - 1], labels[c])) piles.emplace_back();
        piles.back().push_back(static_cast<int>(c) + 1);
      }
      std::size_t pile_idx = 0;
      for (std::size_t c = 0; c < labels.size(); ++c) {
        if (c > 0 && pile_label_less(labels[c - 1], labels[c])) ++pile_idx;
        if (c > 0 && !pile_label_less(labels[c - 1], labels[c])) continue;
        const auto& l = labels[c];
        int sign = 1;
        bool zero = false;
        for (int z : l) {
          if (z == 0) zero = true;
          if (z < 0) sign = -sign;
        }
        auto& pile = piles[pile_idx];
        if (zero) {
          std::shuffle(pile.begin(), pile.end(), rng);
        } else if (sign < 0) {
          std::reverse(pile.begin(), pile.end());
        }
      }
      // Riffle: drop from a pile with probability proportional to its size.
      std::vector<std::size_t> next(piles.size(), 0);
      std::vector<int> deck;
      deck.reserve(static_cast<std::size_t>(n));
      for (int remaining = n; remaining > 0; --remaining) {
        std::uniform_int_distribution<int> pick(0, remaining - 1);
        int r = pick(rng);
        std::size_t i = 0;
        for (;; ++i) {
          const int left = static_cast<int>(piles[i].size() - next[i]);
          if (r < left) break;
          r -= left;
        }
        deck.push_back(piles[i][next[i]++]);
      }
      out.emplace_back(std::move(deck));
    }
  }

  std::vector<Permutation> all;
  all.reserve(count);
  for (auto& s : streams) all.insert(all.end(), s.begin(), s.end());
  return all;
}

// ---- convolution -------------------------------------------------------------

PermDistribution convolve_serial(const PermDistribution& a, const PermDistribution& b) {
  if (a.n() != b.n()) throw std::invalid_argument("convolving distributions on different deck sizes");
  PermDistribution out(a.n());
  for (const auto& [x, px] : a.weights()) {
    for (const auto& [y, py] : b.weights()) out.add(x.compose(y), px * py);
  }
  return out;
}

PermDistribution convolve(const PermDistribution& a, const PermDistribution& b) {
  if (a.n() != b.n()) throw std::invalid_argument("convolving distributions on different deck sizes");
  const std::vector<std::pair<Permutation, Rational>> left(a.weights().begin(), a.weights().end());
  const int threads = parallel::max_threads();
  std::vector<std::unordered_map<Permutation, Rational>> partial(static_cast<std::size_t>(threads));
  const auto count = static_cast<std::int64_t>(left.size());

#pragma omp parallel
  {
    auto& local = partial[static_cast<std::size_t>(parallel::thread_index())];
#pragma omp for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < count; ++i) {
      const auto& [x, px] = left[static_cast<std::size_t>(i)];
      for (const auto& [y, py] : b.weights()) local[x.compose(y)] += px * py;
    }
  }

  PermDistribution out(a.n());
  for (const auto& local : partial) {
    for (const auto& [w, p] : local) out.add(w, p);
  }
  return out;
}

PermDistribution iterate(const ShuffleSpec& spec, int k, int n) {
  if (k < 0) throw std::invalid_argument("iteration count must be nonnegative");
  if (k == 0) return PermDistribution::point_mass(Permutation::identity(n));
  const PermDistribution step = exact_distribution(spec, n);
  PermDistribution acc = step;
  for (int i = 1; i < k; ++i) acc = convolve(acc, step);
  return acc;
}

Rational separation_distance(const PermDistribution& d) {
  const Integer nfact = factorial(static_cast<unsigned>(d.n()));
  if (Integer(static_cast<unsigned long>(d.support_size())) < nfact) return 1;
  Rational worst = 0;
  bool first = true;
  for (const auto& [w, p] : d.weights()) {
    Rational s = 1 - Rational(nfact) * p;
    if (first || s > worst) worst = s;
    first = false;
  }
  return worst;
}

Rational mybound(const ParamVector& p, int k, int n) {
  if (k < 0 || n < 0) throw std::invalid_argument("mybound needs k, n >= 0");
  return Rational(binomial(n, 2)) * pow(p.collision_mass(), static_cast<unsigned>(k));
}

}  // namespace symshuffle
