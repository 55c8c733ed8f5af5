#include "symshuffle/cycle_index.hpp"

#include <stdexcept>

#include "symshuffle/errors.hpp"
#include "symshuffle/symfunc.hpp"
#include "symshuffle/tableau.hpp"

namespace symshuffle {

int mobius(int n) {
  if (n < 1) throw std::invalid_argument("mobius needs n >= 1");
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  return n > 1 ? -result : result;
}

std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

Monomial cycle_monomial(const Partition& lambda) {
  std::vector<int> e(static_cast<std::size_t>(lambda.size()) + 1, 0);
  for (const auto& [part, mult] : lambda.multiplicities()) e[static_cast<std::size_t>(part)] = mult;
  return make_monomial(std::move(e));
}

Rational total_at_one(const Poly& p) {
  Rational s = 0;
  for (const auto& [m, c] : p.terms()) s += c;
  return s;
}

namespace {

enum class Display { plain, reversed, type_c };

struct ExponentRule {
  Display display;
  std::function<Rational(int)> power;  // m -> p_m or extended p_m
};

std::vector<Rational> swapped_halves(const std::vector<Rational>& y) {
  std::vector<Rational> h;
  for (const auto& v : y) h.push_back(v / 2);
  return h;
}

ExponentRule exponent_rule(const ShuffleSpec& spec) {
  const bool rev = spec.reversed;
  if (const auto* m = std::get_if<BiasedRiffle>(&spec.model)) {
    std::vector<Rational> q = m->q;
    return {rev ? Display::reversed : Display::plain,
            [q](int r) { return eval_power_sum(r, std::span<const Rational>(q)); }};
  }
  if (const auto* m = std::get_if<AbgShuffle>(&spec.model)) {
    ParamVector p = m->params;
    return {rev ? Display::reversed : Display::plain, [p](int r) { return extended_power_sum(r, p); }};
  }
  if (const auto* m = std::get_if<TypeCShuffle>(&spec.model)) {
    if (!rev) {
      std::vector<Rational> y = m->y;
      return {Display::type_c, [y](int r) { return eval_power_sum(r, std::span<const Rational>(y)); }};
    }
    // Dealing from the bottom: reversal display over the extended power sums
    // of (y/2; y/2; 0).
    ParamVector p{swapped_halves(m->y), swapped_halves(m->y), 0};
    return {Display::reversed, [p](int r) { return extended_power_sum(r, p); }};
  }
  throw Unsupported("no cycle index for " + spec.kind_name());
}

void check_order(int N, int limit) {
  if (N < 0) throw std::invalid_argument("series order must be nonnegative");
  if (N > limit) {
    throw GuardExceeded("series order " + std::to_string(N) + " exceeds the guard " + std::to_string(limit));
  }
}

Rational signed_unit(long e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

// Coefficient of (u^i x_i)^j in the exponent.
Rational exponent_coefficient(const ExponentRule& rule, int i, int j) {
  Rational sum = 0;
  for (int d : divisors(i)) {
    const int mu = mobius(d);
    if (mu == 0) continue;
    const auto e = static_cast<unsigned>(i / d);
    const Rational pw = rule.power(j * d);
    switch (rule.display) {
      case Display::plain:
        sum += mu * pow(pw, e);
        break;
      case Display::reversed:
        sum += mu * pow(Rational(-pw), e);
        break;
      case Display::type_c:
        if (d % 2 == 1) sum += mu * pow(Rational(2 * pw), e);
        break;
    }
  }
  Rational c = sum / Rational(i * j);
  if (rule.display == Display::reversed) c *= signed_unit(static_cast<long>(i) * j);
  if (rule.display == Display::type_c) {
    if (j % 2 == 0) return 0;
    c /= pow(Rational(2), static_cast<unsigned>(i * j));
  }
  return c;
}

TruncatedSeries factor_exponent(const ExponentRule& rule, int i, int N) {
  TruncatedSeries s(N);
  for (int j = 1; i * j <= N; ++j) {
    const Rational c = exponent_coefficient(rule, i, j);
    if (c != 0) s[i * j] += Poly::variable(i, j) * c;
  }
  return s;
}

}  // namespace

TruncatedSeries cycle_index_exponent(const ShuffleSpec& spec, int N) {
  check_order(N, kMaxSeriesOrder);
  spec.validate();
  const ExponentRule rule = exponent_rule(spec);
  TruncatedSeries s(N);
  for (int i = 1; i <= N; ++i) s += factor_exponent(rule, i, N);
  return s;
}

TruncatedSeries cycle_index_serial(const ShuffleSpec& spec, int N) {
  return series_exp(cycle_index_exponent(spec, N));
}

TruncatedSeries cycle_index(const ShuffleSpec& spec, int N) {
  check_order(N, kMaxSeriesOrder);
  spec.validate();
  const ExponentRule rule = exponent_rule(spec);
  std::vector<TruncatedSeries> factors(static_cast<std::size_t>(N) + 1, TruncatedSeries(N));
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 1; i <= N; ++i) {
    factors[static_cast<std::size_t>(i)] = series_exp(factor_exponent(rule, i, N));
  }
  TruncatedSeries out = TruncatedSeries::one(N);
  for (int i = 1; i <= N; ++i) out = series_mul(out, factors[static_cast<std::size_t>(i)]);
  return out;
}

Rational cycle_type_prob(const ShuffleSpec& spec, int n, const Partition& lambda) {
  if (lambda.size() != n) throw std::invalid_argument("cycle type must be a partition of n");
  return cycle_index(spec, n).coefficient(n, cycle_monomial(lambda));
}

Rational expected_fixed_points(const ShuffleSpec& spec, int n) {
  if (n < 1) throw std::invalid_argument("expected_fixed_points needs n >= 1");
  spec.validate();
  Rational total = 0;
  if (const auto* m = std::get_if<BiasedRiffle>(&spec.model)) {
    for (int j = 1; j <= n; ++j) {
      const Rational pj = eval_power_sum(j, std::span<const Rational>(m->q));
      total += spec.reversed ? Rational(signed_unit(j + 1) * pj) : pj;
    }
    return total;
  }
  ParamVector p;
  if (const auto* m = std::get_if<AbgShuffle>(&spec.model)) {
    p = spec.reversed ? m->params.swapped() : m->params;
  } else if (const auto* m = std::get_if<TypeCShuffle>(&spec.model)) {
    p = ParamVector{swapped_halves(m->y), swapped_halves(m->y), 0};
  } else {
    throw Unsupported("no fixed-point closed form for " + spec.kind_name());
  }
  for (int j = 1; j <= n; ++j) total += extended_power_sum(j, p);
  return total;
}

Rational expected_fixed_points_from_index(const ShuffleSpec& spec, int n) {
  const Poly d = cycle_index(spec, n)[n].derivative(1);
  return total_at_one(d);
}

TruncatedSeries unimodal_gf(int N) {
  check_order(N, kMaxUnimodalOrder);
  TruncatedSeries exponent(N);
  const Poly t = Poly::variable(0);
  for (int i = 1; i <= N; ++i) {
    for (int j = 1; i * j <= N; ++j) {
      Poly sum;
      for (int d : divisors(i)) {
        const int mu = mobius(d);
        if (mu == 0) continue;
        const Poly base = Poly::variable(0, j * d) - Poly(signed_unit(j * d));
        sum += pow(base, static_cast<unsigned>(i / d)) * Rational(mu);
      }
      exponent[i * j] += sum * Poly::variable(i, j) * Rational(1, i * j);
    }
  }
  return series_exp(exponent);
}

TruncatedSeries unimodal_enumerated(int N) {
  check_order(N, kMaxUnimodalOrder);
  TruncatedSeries s(N);
  s[0] = Poly(1);
  const Poly one_plus_t = Poly(1) + Poly::variable(0);
  for (int n = 1; n <= N; ++n) {
    Poly acc;
    for (const auto& u : enumerate_unimodal(n)) {
      Monomial m = cycle_monomial(u.perm.cycle_type());
      if (m.empty()) m.resize(1);
      m[0] = u.max_position - 1;
      acc.add_term(make_monomial(m), 1);
    }
    s[n] = acc * one_plus_t;
  }
  return s;
}

namespace {

// 1 + c u^i x_i^e  (e = 0 drops the marker)
TruncatedSeries binomial_series(int N, int i, const Rational& c, bool with_marker) {
  TruncatedSeries s = TruncatedSeries::one(N);
  if (i <= N) s[i] += (with_marker ? Poly::variable(i) : Poly(1)) * c;
  return s;
}

bool is_uniform_riffle(const ShuffleSpec& spec, int& k) {
  const auto* m = std::get_if<BiasedRiffle>(&spec.model);
  if (m == nullptr) return false;
  k = static_cast<int>(m->q.size());
  for (const auto& v : m->q) {
    if (v != Rational(1, k)) return false;
  }
  return k >= 1;
}

// Lyndon-word count (1/i) sum_{d|i} mu(d) a^{i/d}
Rational necklace_count(int i, const Rational& a) {
  Rational s = 0;
  for (int d : divisors(i)) s += mobius(d) * pow(a, static_cast<unsigned>(i / d));
  return s / i;
}

}  // namespace

TruncatedSeries deck_size_mixture_lhs(const ShuffleSpec& spec, int N) {
  return series_mul(binomial_series(N, 1, -1, false), cycle_index(spec, N));
}

TruncatedSeries deck_size_mixture_rhs(const ShuffleSpec& spec, int N) {
  check_order(N, kMaxSeriesOrder);
  TruncatedSeries out = TruncatedSeries::one(N);
  int k = 0;
  if (spec.reversed && is_uniform_riffle(spec, k)) {
    for (int i = 1; i <= N; ++i) {
      const Rational c = pow(Rational(1, k), static_cast<unsigned>(i));
      TruncatedSeries f(N);
      if (i % 2 == 1) {
        f = series_mul(binomial_series(N, i, c, true), series_inverse(binomial_series(N, i, c, false)));
        f = series_pow(f, necklace_count(i, k));
      } else {
        f = series_mul(binomial_series(N, i, -c, false), series_inverse(binomial_series(N, i, -c, true)));
        f = series_pow(f, necklace_count(i, -k));
      }
      out = series_mul(out, f);
    }
    return out;
  }
  const auto* m = std::get_if<AbgShuffle>(&spec.model);
  if (m == nullptr || spec.reversed) throw Unsupported("mixture form needs a reversed k-riffle or an abg shuffle");
  const ParamVector& p = m->params;
  for (const auto& b : p.beta) {
    if (b != 0) throw Unsupported("mixture form needs beta = 0");
  }
  std::vector<Rational> alpha;
  for (const auto& a : p.alpha) {
    if (a != 0) alpha.push_back(a);
  }
  const int q = static_cast<int>(alpha.size());
  const Rational one_minus_gamma = 1 - p.gamma;
  for (const auto& a : alpha) {
    if (a * q != one_minus_gamma) throw Unsupported("mixture form needs equal alphas");
  }
  for (int i = 1; i <= N; ++i) {
    // Poisson with mean u^i (1 - (1-gamma)^i)/i: Taylor sum of exp(mean (x_i - 1)).
    const Rational lambda = (1 - pow(one_minus_gamma, static_cast<unsigned>(i))) / i;
    TruncatedSeries poisson(N);
    const Poly step = (Poly::variable(i) - Poly(1)) * lambda;
    Poly power(1);
    Rational inv_fact = 1;
    for (int r = 0; r * i <= N; ++r) {
      if (r > 0) {
        power *= step;
        inv_fact /= r;
      }
      poisson[r * i] = power * inv_fact;
    }
    out = series_mul(out, poisson);
    if (q == 0) continue;
    // Geometrics with parameter (u(1-gamma)/q)^i.
    const Rational c = pow(one_minus_gamma / q, static_cast<unsigned>(i));
    TruncatedSeries g = series_mul(binomial_series(N, i, -c, false), series_inverse(binomial_series(N, i, -c, true)));
    out = series_mul(out, series_pow(g, necklace_count(i, q)));
  }
  return out;
}

bool deck_size_mixture_check(const ShuffleSpec& spec, int N) {
  return deck_size_mixture_lhs(spec, N) == deck_size_mixture_rhs(spec, N);
}

Rational rsk_shape_prob(const ShuffleSpec& spec, int n, const Partition& lambda) {
  if (lambda.size() != n) throw std::invalid_argument("shape must be a partition of n");
  spec.validate(std::holds_alternative<MuShuffle>(spec.model) ? n : -1);
  // Reversing the deck transposes the RSK shape.
  const Partition shape = spec.reversed ? lambda.conjugate() : lambda;
  const Rational f(hook_length_count(shape));
  if (const auto* m = std::get_if<BiasedRiffle>(&spec.model)) {
    return f * eval_schur(shape, std::span<const Rational>(m->q));
  }
  if (const auto* m = std::get_if<AbgShuffle>(&spec.model)) return f * eval_extended_schur(shape, m->params);
  if (const auto* m = std::get_if<TypeCShuffle>(&spec.model)) {
    return f * eval_stembridge_S(shape, std::span<const Rational>(m->y)) / pow(Rational(2), static_cast<unsigned>(n));
  }
  if (const auto* m = std::get_if<MuShuffle>(&spec.model)) {
    return f * Rational(kostka(shape, m->mu)) / Rational(multinomial(m->mu));
  }
  const int k = std::get<TopToRandom>(spec.model).iterations;
  Rational sum = 0;
  for (int a = 0; a <= n; ++a) {
    const Rational pa = occupied_boxes_probability(a, k, n);
    if (pa == 0) continue;
    sum += pa * Rational(factorial(static_cast<unsigned>(n - a)) * skew_count(shape, n - a));
  }
  return f * sum / Rational(factorial(static_cast<unsigned>(n)));
}

TruncatedSeries riffle_product(int k, int N) {
  check_order(N, kMaxSeriesOrder);
  TruncatedSeries out = TruncatedSeries::one(N);
  for (int i = 1; i <= N; ++i) {
    const Rational c = pow(Rational(1, k), static_cast<unsigned>(i));
    out = series_mul(out, series_pow(binomial_series(N, i, -c, true), Rational(-necklace_count(i, k))));
  }
  return out;
}

TruncatedSeries type_c_uniform_product(int k, int N) {
  check_order(N, kMaxSeriesOrder);
  TruncatedSeries out = TruncatedSeries::one(N);
  for (int m = 1; m <= N; ++m) {
    const Rational c = pow(Rational(1, 2 * k), static_cast<unsigned>(m));
    Rational e = 0;
    for (int d : divisors(m)) {
      if (d % 2 == 1) e += mobius(d) * pow(Rational(2 * k), static_cast<unsigned>(m / d));
    }
    e /= 2 * m;
    const TruncatedSeries ratio =
        series_mul(binomial_series(N, m, c, true), series_inverse(binomial_series(N, m, -c, true)));
    out = series_mul(out, series_pow(ratio, e));
  }
  return out;
}

TruncatedSeries reversed_riffle_fixed_point_gf(int k, int N) {
  const Rational c(1, k);
  TruncatedSeries num = series_pow(binomial_series(N, 1, c, true), static_cast<long>(k));
  TruncatedSeries den = series_mul(series_pow(binomial_series(N, 1, c, false), static_cast<long>(k)),
                                   binomial_series(N, 1, -1, false));
  return series_mul(num, series_inverse(den));
}

TruncatedSeries fixed_point_marginal(const TruncatedSeries& s) {
  TruncatedSeries out(s.order());
  for (int n = 0; n <= s.order(); ++n) {
    Poly acc;
    for (const auto& [m, c] : s[n].terms()) {
      std::vector<int> e(2, 0);
      if (m.size() > 0) e[0] = m[0];
      if (m.size() > 1) e[1] = m[1];
      acc.add_term(make_monomial(e), c);
    }
    out[n] = acc;
  }
  return out;
}

}  // namespace symshuffle
