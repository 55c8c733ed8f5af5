#pragma once

#include <vector>

#include "symshuffle/partition.hpp"
#include "symshuffle/series.hpp"
#include "symshuffle/shuffle.hpp"

namespace symshuffle {

inline constexpr int kMaxSeriesOrder = 12;
inline constexpr int kMaxUnimodalOrder = 10;

int mobius(int n);
std::vector<int> divisors(int n);

// Marker monomial prod_i x_i^{m_i(lambda)} (variable i is x_i).
Monomial cycle_monomial(const Partition& lambda);
// Set t and every x_i to 1.
Rational total_at_one(const Poly& p);

// The cycle index sum_n u^n E_n(prod x_i^{N_i}) truncated at u^N.  Defined for
// biased riffle, typeC and abg specs, reversed or not; mu and top-to-random
// throw Unsupported, N > kMaxSeriesOrder throws GuardExceeded.
TruncatedSeries cycle_index(const ShuffleSpec& spec, int N);
// Same series as the exp of a single exponent sum; reference for the
// factor-parallel kernel above.
TruncatedSeries cycle_index_serial(const ShuffleSpec& spec, int N);
// The exponent sum itself.
TruncatedSeries cycle_index_exponent(const ShuffleSpec& spec, int N);

// Mass of cycle type lambda on an n-card deck, read off the cycle index.
Rational cycle_type_prob(const ShuffleSpec& spec, int n, const Partition& lambda);

// Closed forms via (extended) power sums.
Rational expected_fixed_points(const ShuffleSpec& spec, int n);
// d/dx_1 of the cycle index at x = 1, coefficient of u^n.
Rational expected_fixed_points_from_index(const ShuffleSpec& spec, int n);

// Product formula for unimodal permutations in u, t, x_i.  N <= kMaxUnimodalOrder.
TruncatedSeries unimodal_gf(int N);
// (1+t) sum_{w unimodal} t^{max(w)-1} prod x_i^{N_i(w)} per degree, by enumeration.
TruncatedSeries unimodal_enumerated(int N);

// Random-deck-size form: (1-u) times the cycle index against the product of
// independent binomial/geometric (reversed k-riffle) or Poisson/geometric
// (abg with beta = 0 and equal alphas) pgfs.  Other specs throw Unsupported.
TruncatedSeries deck_size_mixture_lhs(const ShuffleSpec& spec, int N);
TruncatedSeries deck_size_mixture_rhs(const ShuffleSpec& spec, int N);
bool deck_size_mixture_check(const ShuffleSpec& spec, int N);

// Probability that the RSK shape of the shuffled permutation is lambda.
Rational rsk_shape_prob(const ShuffleSpec& spec, int n, const Partition& lambda);

// Closed-form products for uniform parameters.
// prod_i (1 - u^i x_i / k^i)^{-(1/i) sum_{d|i} mu(d) k^{i/d}}
TruncatedSeries riffle_product(int k, int N);
// prod_m ((1 + x_m u^m/(2k)^m) / (1 - x_m u^m/(2k)^m))^{(1/2m) sum_{d|m, d odd} mu(d) (2k)^{m/d}}
TruncatedSeries type_c_uniform_product(int k, int N);
// (1 + x_1 u/k)^k / ((1 + u/k)^k (1 - u))
TruncatedSeries reversed_riffle_fixed_point_gf(int k, int N);
// Set x_i = 1 for every i >= 2 (keeps x_1 and t).
TruncatedSeries fixed_point_marginal(const TruncatedSeries& s);

}  // namespace symshuffle
