#include "symshuffle/verify.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "symshuffle/cycle_index.hpp"
#include "symshuffle/rsk.hpp"
#include "symshuffle/shuffle.hpp"
#include "symshuffle/symfunc.hpp"
#include "symshuffle/tableau.hpp"

namespace symshuffle {

std::string to_string(Suite s) {
  switch (s) {
    case Suite::identities: return "identities";
    case Suite::rsk: return "rsk";
    case Suite::shuffles: return "shuffles";
    case Suite::cycle_index: return "cycle-index";
    case Suite::all: return "all";
  }
  return "?";
}

Suite parse_suite(std::string_view name) {
  for (Suite s : {Suite::identities, Suite::rsk, Suite::shuffles, Suite::cycle_index, Suite::all}) {
    if (to_string(s) == name) return s;
  }
  throw std::invalid_argument("unknown suite: " + std::string(name));
}

namespace {

using Results = std::vector<CheckResult>;

// A check body returns an empty string on success, or the first discrepancy.
void run_check(Results& out, std::string name, const std::function<std::string()>& body) {
  std::string detail;
  try {
    detail = body();
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  out.push_back({std::move(name), detail.empty(), std::move(detail)});
}

std::string mismatch(const std::string& where, const Rational& expected, const Rational& actual) {
  if (expected == actual) return {};
  return where + ": expected " + to_string(expected) + ", got " + to_string(actual);
}

template <class Key, class Show>
std::string compare_maps(const std::map<Key, Rational>& expected, const std::map<Key, Rational>& actual,
                         Show show) {
  std::set<Key> keys;
  for (const auto& [k, v] : expected) keys.insert(k);
  for (const auto& [k, v] : actual) keys.insert(k);
  for (const auto& k : keys) {
    const auto e = expected.count(k) ? expected.at(k) : Rational(0);
    const auto a = actual.count(k) ? actual.at(k) : Rational(0);
    if (e != a) return mismatch(show(k), e, a);
  }
  return {};
}

std::string compare_distributions(const PermDistribution& expected, const PermDistribution& actual) {
  return compare_maps(expected.weights(), actual.weights(), [](const Permutation& w) { return w.to_string(); });
}

std::vector<Rational> uniform(int k) { return std::vector<Rational>(static_cast<std::size_t>(k), Rational(1, k)); }

ParamVector abg_params(std::vector<Rational> a, std::vector<Rational> b, Rational g) {
  return ParamVector{std::move(a), std::move(b), std::move(g)};
}

std::vector<ShuffleSpec> default_specs() {
  return {ShuffleSpec::riffle(2),
          ShuffleSpec::riffle(3),
          ShuffleSpec::riffle(2, true),
          ShuffleSpec::riffle(3, true),
          ShuffleSpec::biased_riffle({Rational(1, 3), Rational(2, 3)}),
          ShuffleSpec::type_c({1}),
          ShuffleSpec::type_c(uniform(2)),
          ShuffleSpec::type_c({Rational(1, 3), Rational(2, 3)}, true),
          ShuffleSpec::abg(abg_params({Rational(1, 2)}, {}, Rational(1, 2))),
          ShuffleSpec::abg(abg_params({Rational(1, 3)}, {Rational(1, 6)}, Rational(1, 2)), true)};
}

Partition shape_of(const Permutation& w) { return rsk(w).Q.shape(); }

// ---- identities ----------------------------------------------------------------

void identities_suite(Results& out, const VerifyOptions& opt) {
  for (CauchyKind kind : {CauchyKind::classic, CauchyKind::dual, CauchyKind::stembridge,
                          CauchyKind::dual_stembridge}) {
    run_check(out, "cauchy-" + to_string(kind) + " deg4", [kind] {
      const Poly d = cauchy_difference(kind, 4, 2, 2);
      return d.is_zero() ? std::string() : "nonzero difference " + d.to_string();
    });
  }
  run_check(out, "cauchy-extended deg4", [] {
    const Poly d = cauchy_difference(CauchyKind::extended, 4, 2, 0,
                                     abg_params({Rational(1, 3)}, {Rational(1, 4)}, Rational(5, 12)));
    return d.is_zero() ? std::string() : "nonzero difference " + d.to_string();
  });
  run_check(out, "schur tableaux = jacobi-trudi n<=5", [] {
    const std::vector<Rational> x{Rational(1, 2), Rational(1, 3), Rational(1, 7)};
    for (int n = 0; n <= 5; ++n) {
      for (const auto& lam : enumerate_partitions(n)) {
        auto d = mismatch("s" + lam.to_string(), eval_schur(lam, x), eval_schur_jacobi_trudi(lam, x));
        if (!d.empty()) return d;
      }
    }
    return std::string();
  });
  run_check(out, "extended s2 = (a^2+1)/2", [] {
    for (const Rational& a : {Rational(0), Rational(1, 3), Rational(1, 2), Rational(1)}) {
      auto d = mismatch("a=" + to_string(a), (a * a + 1) / 2,
                        eval_extended_schur(Partition::row(2), abg_params({a}, {}, 1 - a)));
      if (!d.empty()) return d;
    }
    return std::string();
  });
  run_check(out, "extended schur positivity n<=6", [] {
    const auto p = abg_params({Rational(1, 5), Rational(1, 7)}, {Rational(1, 3)}, Rational(34, 105));
    for (int n = 1; n <= 6; ++n) {
      for (const auto& lam : enumerate_partitions(n)) {
        if (eval_extended_schur(lam, p) < 0) return "negative at " + lam.to_string();
      }
    }
    return std::string();
  });
  run_check(out, "sum f^2 = n! n<=8", [] {
    for (int n = 0; n <= 8; ++n) {
      Integer s = 0;
      for (const auto& lam : enumerate_partitions(n)) s += hook_length_count(lam) * hook_length_count(lam);
      auto d = mismatch("n=" + std::to_string(n), Rational(factorial(static_cast<unsigned>(n))), Rational(s));
      if (!d.empty()) return d;
    }
    return std::string();
  });
  run_check(out, "character column orthogonality n<=6", [] {
    for (int n = 1; n <= 6; ++n) {
      const auto parts = enumerate_partitions(n);
      for (const auto& mu : parts) {
        for (const auto& nu : parts) {
          Integer s = 0;
          for (const auto& lam : parts) s += mn_character(lam, mu) * mn_character(lam, nu);
          const Integer want = mu == nu ? mu.z() : Integer(0);
          if (s != want) return "mu=" + mu.to_string() + " nu=" + nu.to_string();
        }
      }
    }
    return std::string();
  });
  run_check(out, "beta transpose symmetry n<=7", [] {
    for (int n = 1; n <= 7; ++n) {
      for (const auto& lam : enumerate_partitions(n)) {
        Integer total = 0;
        for (const auto& D : all_descent_sets(n)) {
          if (beta(lam.conjugate(), D) != beta(lam, D.complement())) return lam.to_string();
          total += beta(lam, D);
        }
        if (total != hook_length_count(lam)) return "sum over D at " + lam.to_string();
      }
    }
    return std::string();
  });
  run_check(out, "unimodal counts n<=10", [] {
    for (int n = 1; n <= 10; ++n) {
      const auto u = enumerate_unimodal(n);
      if (u.size() != (std::size_t{1} << (n - 1))) return "count at n=" + std::to_string(n);
      std::map<int, long> by_max;
      for (const auto& x : u) ++by_max[x.max_position];
      for (int i = 1; i <= n; ++i) {
        if (Integer(by_max[i]) != binomial(n - 1, i - 1)) return "max at " + std::to_string(i);
      }
    }
    return std::string();
  });
  (void)opt;
}

// ---- rsk ------------------------------------------------------------------------

std::vector<Word> all_words(const std::vector<int>& letters, int n) {
  std::vector<Word> out;
  Word w(static_cast<std::size_t>(n));
  std::function<void(int)> rec = [&](int pos) {
    if (pos == n) {
      out.push_back(w);
      return;
    }
    for (int l : letters) {
      w[static_cast<std::size_t>(pos)] = l;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

void rsk_suite(Results& out, const VerifyOptions& opt) {
  run_check(out, "riffle word example", [] {
    const auto w = word_to_permutation(parse_word("1 3 2 1 2 2 1 3 1 2"), WordScheme::riffle);
    return w == Permutation::parse("1 9 5 2 6 7 3 10 4 8") ? std::string() : "got " + w.to_string();
  });
  run_check(out, "signed word example", [] {
    const auto w = word_to_permutation(parse_word("1 -1 2 -2 1 1 -1 1 2 2 -1 2 -2"), WordScheme::signed_);
    return w == Permutation::parse("1 7 8 13 2 3 6 4 9 10 5 11 12") ? std::string() : "got " + w.to_string();
  });
  run_check(out, "abg word example", [] {
    const auto ws = word_to_permutations(parse_word("-2 0 1 0 0 2 -1 -2 -1 1"), WordScheme::abg);
    if (ws.size() != 6) return "expected 6 permutations, got " + std::to_string(ws.size());
    bool found = false;
    for (const auto& wp : ws) {
      if (wp.weight != Rational(1, 6)) return "weight " + to_string(wp.weight);
      found = found || wp.perm == Permutation::parse("2 5 8 6 7 10 4 1 3 9");
    }
    return found ? std::string() : "2 5 8 6 7 10 4 1 3 9 missing";
  });
  const int n_max = std::min(opt.n, 6);
  for (RskVariant v : {RskVariant::standard, RskVariant::type_c, RskVariant::brkv}) {
    run_check(out, "rsk round trip " + to_string(v) + " n<=" + std::to_string(std::min(n_max, 5)), [v, n_max] {
      const std::vector<int> letters =
          v == RskVariant::standard ? std::vector<int>{1, 2, 3} : std::vector<int>{-2, -1, 1, 2};
      for (int n = 1; n <= std::min(n_max, 5); ++n) {
        std::set<std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>> seen;
        for (const auto& w : all_words(letters, n)) {
          const auto pair = rsk(w, v);
          if (!valid_insertion_tableau(pair.P, v) || !pair.Q.is_standard()) return "bad pair for " + word_to_string(w);
          if (rsk_inverse(pair, v) != w) return "inverse fails for " + word_to_string(w);
          if (!seen.insert({pair.P.rows(), pair.Q.rows()}).second) return "collision at " + word_to_string(w);
        }
      }
      return std::string();
    });
  }
  run_check(out, "recording tableau of word = of permutation (riffle, signed)", [n_max] {
    for (int n = 1; n <= n_max; ++n) {
      for (const auto& w : all_words({1, 2, 3}, n)) {
        if (rsk(w, RskVariant::standard).Q != rsk(word_to_permutation(w, WordScheme::riffle)).Q) {
          return "riffle " + word_to_string(w);
        }
      }
      if (n > 5) continue;
      for (const auto& w : all_words({-2, -1, 1, 2}, n)) {
        if (rsk(w, RskVariant::type_c).Q != rsk(word_to_permutation(w, WordScheme::signed_)).Q) {
          return "signed " + word_to_string(w);
        }
      }
    }
    return std::string();
  });
  run_check(out, "reversal transposes shape n<=6", [n_max] {
    for (int n = 1; n <= n_max; ++n) {
      for (const auto& w : all_permutations(n)) {
        if (shape_of(w.reverse()) != shape_of(w).conjugate()) return w.to_string();
      }
    }
    return std::string();
  });
  run_check(out, "typeC shapes fit the (k,k) hook, k<=2", [n_max] {
    for (int k = 1; k <= 2; ++k) {
      std::vector<int> letters;
      for (int i = 1; i <= k; ++i) {
        letters.push_back(i);
        letters.push_back(-i);
      }
      for (int n = 1; n <= n_max; ++n) {
        for (const auto& w : all_words(letters, n)) {
          if (!rsk(w, RskVariant::type_c).P.shape().fits_in_hook(k, k)) return word_to_string(w);
        }
      }
    }
    return std::string();
  });
}

// ---- shuffles ---------------------------------------------------------------------

std::map<Tableau, Rational> recording_law(const PermDistribution& d) {
  return d.marginal<Tableau>([](const Permutation& w) { return rsk(w).Q; });
}

std::string check_recording_law(const PermDistribution& d, const std::function<Rational(const Partition&)>& law) {
  const auto got = recording_law(d);
  for (const auto& lam : enumerate_partitions(d.n())) {
    const Rational want = law(lam);
    for (const auto& T : enumerate_syt(lam)) {
      const Rational have = got.count(T) ? got.at(T) : Rational(0);
      if (have != want) return mismatch("Q=" + T.to_string(), want, have);
    }
  }
  return {};
}

std::string statistical_agreement(const std::vector<Permutation>& samples, const PermDistribution& exact) {
  std::map<Permutation, double> freq;
  for (const auto& w : samples) freq[w] += 1.0;
  const double N = static_cast<double>(samples.size());
  for (const auto& w : all_permutations(exact.n())) {
    const double p = exact.mass(w).get_d();
    const double f = freq.count(w) ? freq[w] / N : 0.0;
    const double sigma = std::sqrt(p * (1 - p) / N);
    if (std::abs(f - p) > 4 * sigma + 1e-12) {
      std::ostringstream s;
      s.precision(12);
      s << w.to_string() << ": exact " << p << ", empirical " << f;
      return s.str();
    }
  }
  return {};
}

void shuffles_suite(Results& out, const VerifyOptions& opt) {
  const int n_max = std::min(opt.n, 5);
  run_check(out, "distributions normalized", [n_max] {
    auto specs = default_specs();
    specs.push_back(ShuffleSpec::mu({1, 2, 0, 2}));
    specs.push_back(ShuffleSpec::top_to_random(3));
    for (const auto& s : specs) {
      const int n = std::holds_alternative<MuShuffle>(s.model) ? 5 : n_max;
      const auto d = exact_distribution(s, n);
      if (!d.nonnegative() || d.total() != 1) return s.to_string();
    }
    return std::string();
  });
  run_check(out, "biased riffle depends on inverse descents", [n_max] {
    const auto s = ShuffleSpec::biased_riffle({Rational(1, 2), Rational(1, 3), Rational(1, 6)});
    const auto d = exact_distribution(s, n_max);
    std::map<std::uint64_t, Rational> by_class;
    for (const auto& w : all_permutations(n_max)) {
      const auto key = w.inverse().descents().mask();
      auto [it, fresh] = by_class.try_emplace(key, d.mass(w));
      if (!fresh && it->second != d.mass(w)) return "class of " + w.to_string();
    }
    return std::string();
  });
  run_check(out, "reversal conjugacy abg", [n_max] {
    const auto p = abg_params({Rational(1, 3), Rational(1, 6)}, {Rational(1, 4)}, Rational(1, 4));
    return compare_distributions(exact_distribution(ShuffleSpec::abg(p.swapped()), n_max),
                                 exact_distribution(ShuffleSpec::abg(p, true), n_max));
  });
  run_check(out, "typeC and abg(y/2;y/2) marginals agree", [n_max] {
    for (int q = 1; q <= 2; ++q) {
      const std::vector<Rational> half(static_cast<std::size_t>(q), Rational(1, 2 * q));
      for (int n = 1; n <= n_max; ++n) {
        const auto a = exact_distribution(ShuffleSpec::type_c(uniform(q)), n);
        const auto b = exact_distribution(ShuffleSpec::abg(abg_params(half, half, 0)), n);
        auto ct = [](const Permutation& w) { return w.cycle_type(); };
        auto d = compare_maps(a.marginal<Partition>(ct), b.marginal<Partition>(ct),
                              [](const Partition& l) { return "cycle type " + l.to_string(); });
        if (!d.empty()) return d;
        d = compare_maps(a.marginal<Partition>(shape_of), b.marginal<Partition>(shape_of),
                         [](const Partition& l) { return "shape " + l.to_string(); });
        if (!d.empty()) return d;
      }
    }
    return std::string();
  });
  run_check(out, "recording law biased riffle", [n_max] {
    const std::vector<Rational> q{Rational(1, 2), Rational(1, 3), Rational(1, 6)};
    return check_recording_law(exact_distribution(ShuffleSpec::biased_riffle(q), n_max),
                               [&](const Partition& l) -> Rational { return eval_schur(l, q); });
  });
  run_check(out, "recording law typeC", [n_max] {
    const std::vector<Rational> y{Rational(1, 3), Rational(2, 3)};
    return check_recording_law(exact_distribution(ShuffleSpec::type_c(y), n_max), [&](const Partition& l) -> Rational {
      return eval_stembridge_S(l, y) / pow(Rational(2), static_cast<unsigned>(l.size()));
    });
  });
  run_check(out, "recording law abg", [n_max] {
    const auto p = abg_params({Rational(1, 3)}, {Rational(1, 4)}, Rational(5, 12));
    return check_recording_law(exact_distribution(ShuffleSpec::abg(p), n_max),
                               [&](const Partition& l) -> Rational { return eval_extended_schur(l, p); });
  });
  run_check(out, "recording law mu", [] {
    const std::vector<int> mu{2, 1, 2};
    return check_recording_law(exact_distribution(ShuffleSpec::mu(mu), 5), [&](const Partition& l) -> Rational {
      return Rational(kostka(l, mu)) / Rational(multinomial(mu));
    });
  });
  run_check(out, "iterate abg(1/2;;1/2) closed form", [n_max] {
    for (int k = 1; k <= 3; ++k) {
      const Rational a = pow(Rational(1, 2), static_cast<unsigned>(k));
      auto d = compare_distributions(exact_distribution(ShuffleSpec::abg(abg_params({a}, {}, 1 - a)), n_max),
                                     iterate(ShuffleSpec::abg(abg_params({Rational(1, 2)}, {}, Rational(1, 2))), k, n_max));
      if (!d.empty()) return "k=" + std::to_string(k) + " " + d;
    }
    return std::string();
  });
  run_check(out, "two 2-riffles = one 4-riffle", [n_max] {
    return compare_distributions(exact_distribution(ShuffleSpec::riffle(4), n_max),
                                 iterate(ShuffleSpec::riffle(2), 2, n_max));
  });
  run_check(out, "separation <= bound", [n_max] {
    for (const auto& p : {abg_params({Rational(1, 2)}, {}, Rational(1, 2)),
                          abg_params({Rational(1, 3)}, {Rational(1, 3)}, Rational(1, 3))}) {
      for (int k = 1; k <= 4; ++k) {
        const Rational sep = separation_distance(iterate(ShuffleSpec::abg(p), k, n_max));
        if (sep > mybound(p, k, n_max)) return p.to_string() + " k=" + std::to_string(k);
      }
    }
    return std::string();
  });
  run_check(out, "sampler matches exact (4 sigma)", [&opt] {
    for (const auto& s : {ShuffleSpec::riffle(2), ShuffleSpec::type_c({Rational(1, 3), Rational(2, 3)}, true),
                          ShuffleSpec::abg(abg_params({Rational(1, 3)}, {Rational(1, 6)}, Rational(1, 2))),
                          ShuffleSpec::mu({1, 2, 1}), ShuffleSpec::top_to_random(2)}) {
      auto d = statistical_agreement(sample(s, 4, opt.seed, opt.samples), exact_distribution(s, 4));
      if (!d.empty()) return s.to_string() + " " + d;
    }
    return std::string();
  });
  run_check(out, "pile sampler matches iterated shuffle (4 sigma)", [&opt] {
    const auto p = abg_params({Rational(1, 3)}, {Rational(1, 6)}, Rational(1, 2));
    for (int k = 1; k <= 2; ++k) {
      auto d = statistical_agreement(sample_piles(p, 4, k, opt.seed, opt.samples), iterate(ShuffleSpec::abg(p), k, 4));
      if (!d.empty()) return "k=" + std::to_string(k) + " " + d;
    }
    return std::string();
  });
}

// ---- cycle index --------------------------------------------------------------------

void cycle_index_suite(Results& out, const VerifyOptions& opt) {
  const int n_max = std::min(opt.n, kMaxSeriesOrder);
  for (const auto& s : default_specs()) {
    run_check(out, "cycle types " + s.to_string() + " n<=" + std::to_string(n_max), [&s, n_max] {
      const auto index = cycle_index(s, n_max);
      for (int n = 1; n <= n_max; ++n) {
        const auto mass = exact_distribution(s, n).marginal<Partition>([](const Permutation& w) { return w.cycle_type(); });
        for (const auto& lam : enumerate_partitions(n)) {
          const Rational want = mass.count(lam) ? mass.at(lam) : Rational(0);
          auto d = mismatch(lam.to_string(), want, index.coefficient(n, cycle_monomial(lam)));
          if (!d.empty()) return d;
        }
      }
      return std::string();
    });
  }
  run_check(out, "expected fixed points", [n_max] {
    for (int k = 2; k <= 4; ++k) {
      for (bool rev : {false, true}) {
        const auto s = ShuffleSpec::riffle(k, rev);
        for (int n = 1; n <= n_max; ++n) {
          const Rational closed = expected_fixed_points(s, n);
          auto d = mismatch(s.to_string() + " n=" + std::to_string(n), closed, expected_fixed_points_from_index(s, n));
          if (!d.empty()) return d;
        }
      }
    }
    return std::string();
  });
  run_check(out, "typeC reversal invariance order 8", [] {
    const std::vector<Rational> y{Rational(1, 3), Rational(2, 3)};
    return cycle_index(ShuffleSpec::type_c(y), 8) == cycle_index(ShuffleSpec::type_c(y, true), 8)
               ? std::string()
               : "series differ";
  });
  run_check(out, "typeC uniform product order 8", [] {
    for (int k = 1; k <= 3; ++k) {
      if (!(cycle_index(ShuffleSpec::type_c(uniform(k)), 8) == type_c_uniform_product(k, 8))) {
        return "k=" + std::to_string(k);
      }
    }
    return std::string();
  });
  run_check(out, "k-riffle product order 8", [] {
    for (int k = 2; k <= 4; ++k) {
      if (!(cycle_index(ShuffleSpec::riffle(k), 8) == riffle_product(k, 8))) return "k=" + std::to_string(k);
    }
    return std::string();
  });
  run_check(out, "reversed riffle fixed-point gf order 8", [] {
    for (int k = 2; k <= 4; ++k) {
      const auto m = fixed_point_marginal(cycle_index(ShuffleSpec::riffle(k, true), 8));
      if (!(m == reversed_riffle_fixed_point_gf(k, 8))) return "k=" + std::to_string(k);
    }
    return std::string();
  });
  run_check(out, "unimodal gf n<=9", [] {
    return unimodal_gf(9) == unimodal_enumerated(9) ? std::string() : "series differ";
  });
  run_check(out, "deck-size mixture order 6", [] {
    for (const auto& s : {ShuffleSpec::riffle(2, true), ShuffleSpec::riffle(3, true),
                          ShuffleSpec::abg(abg_params({Rational(1, 2)}, {}, Rational(1, 2))),
                          ShuffleSpec::abg(abg_params({}, {}, 1))}) {
      if (!deck_size_mixture_check(s, 6)) return s.to_string();
    }
    return std::string();
  });
  run_check(out, "shape probabilities", [n_max] {
    const int n = std::min(n_max, 5);
    std::vector<ShuffleSpec> specs = default_specs();
    specs.push_back(ShuffleSpec::top_to_random(2));
    specs.push_back(ShuffleSpec::mu({2, 1, 2}));
    for (const auto& s : specs) {
      const int deck = std::holds_alternative<MuShuffle>(s.model) ? 5 : n;
      const auto mass = exact_distribution(s, deck).marginal<Partition>(shape_of);
      for (const auto& lam : enumerate_partitions(deck)) {
        const Rational want = mass.count(lam) ? mass.at(lam) : Rational(0);
        auto d = mismatch(s.to_string() + " " + lam.to_string(), want, rsk_shape_prob(s, deck, lam));
        if (!d.empty()) return d;
      }
    }
    return std::string();
  });
  run_check(out, "descent-class average of beta", [n_max] {
    // sum_D Prob_q(D) beta_lambda(D) = s_lambda(q), with Prob_q(D) the mass of one w with Des(w^-1) = D.
    const std::vector<Rational> q{Rational(1, 2), Rational(1, 3), Rational(1, 6)};
    const int n = std::min(n_max, 5);
    const auto d = exact_distribution(ShuffleSpec::biased_riffle(q), n);
    std::map<std::uint64_t, Rational> prob;
    for (const auto& [w, p] : d.weights()) prob[w.inverse().descents().mask()] = p;
    for (const auto& lam : enumerate_partitions(n)) {
      Rational s = 0;
      for (const auto& D : all_descent_sets(n)) {
        if (prob.count(D.mask())) s += prob[D.mask()] * Rational(beta(lam, D));
      }
      auto e = mismatch(lam.to_string(), eval_schur(lam, q), s);
      if (!e.empty()) return e;
    }
    return std::string();
  });
}

}  // namespace

std::vector<CheckResult> run_suite(Suite suite, const VerifyOptions& options) {
  Results out;
  if (suite == Suite::identities || suite == Suite::all) identities_suite(out, options);
  if (suite == Suite::rsk || suite == Suite::all) rsk_suite(out, options);
  if (suite == Suite::shuffles || suite == Suite::all) shuffles_suite(out, options);
  if (suite == Suite::cycle_index || suite == Suite::all) cycle_index_suite(out, options);
  return out;
}

std::string format_report(const std::vector<CheckResult>& results) {
  std::string s;
  for (const auto& r : results) {
    s += r.name + ": " + (r.pass ? "PASS" : "FAIL (" + r.detail + ")") + "\n";
  }
  return s;
}

}  // namespace symshuffle
