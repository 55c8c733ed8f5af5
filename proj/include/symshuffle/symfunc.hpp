#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symshuffle/partition.hpp"
#include "symshuffle/poly.hpp"
#include "symshuffle/rational.hpp"
#include "symshuffle/tableau.hpp"

namespace symshuffle {

/// Thoma-type parameters (alpha; beta; gamma).  Shuffles additionally need
/// gamma + sum(alpha) + sum(beta) == 1.
struct ParamVector {
  std::vector<Rational> alpha;
  std::vector<Rational> beta;
  Rational gamma = 0;

  Rational total() const;
  bool nonnegative() const;
  bool is_normalized() const { return nonnegative() && total() == 1; }
  // (beta; alpha; gamma)
  ParamVector swapped() const { return {beta, alpha, gamma}; }
  // sum alpha_i^2 + sum beta_i^2
  Rational collision_mass() const;
  std::string to_string() const;

  friend bool operator==(const ParamVector&, const ParamVector&) = default;
};

inline bool is_zero_value(const Rational& r) { return r == 0; }
inline bool is_zero_value(const Poly& p) { return p.is_zero(); }

// ---- generic kernels over Rational or Poly --------------------------------

template <class T>
T power_sum(int r, std::span<const T> x) {
  T total(0);
  for (const auto& xi : x) {
    T term(1);
    for (int e = 0; e < r; ++e) term = term * xi;
    total += term;
  }
  return total;
}

template <class T>
T power_sum(const Partition& lambda, std::span<const T> x) {
  T total(1);
  for (int part : lambda.parts()) total = total * power_sum<T>(part, x);
  return total;
}

// h_0 .. h_kmax of the given variables.
template <class T>
std::vector<T> complete_homogeneous(std::span<const T> x, int kmax) {
  std::vector<T> h(static_cast<std::size_t>(kmax) + 1, T(0));
  h[0] = T(1);
  for (const auto& xi : x) {
    for (int k = 1; k <= kmax; ++k) {
      h[static_cast<std::size_t>(k)] += xi * h[static_cast<std::size_t>(k - 1)];
    }
  }
  return h;
}

template <class T>
std::vector<T> elementary(std::span<const T> x, int kmax) {
  std::vector<T> e(static_cast<std::size_t>(kmax) + 1, T(0));
  e[0] = T(1);
  for (const auto& xi : x) {
    for (int k = kmax; k >= 1; --k) {
      e[static_cast<std::size_t>(k)] += xi * e[static_cast<std::size_t>(k - 1)];
    }
  }
  return e;
}

// Division-free determinant: row expansion memoised over used-column masks.
template <class T>
T determinant(const std::vector<std::vector<T>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return T(1);
  std::vector<std::optional<T>> memo(std::size_t{1} << n);
  auto rec = [&](auto&& self, std::size_t mask) -> T {
    const auto row = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (row == n) return T(1);
    if (memo[mask]) return *memo[mask];
    T total(0);
    int free_seen = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (mask & (std::size_t{1} << c)) continue;
      if (!is_zero_value(m[row][c])) {
        T sub = m[row][c] * self(self, mask | (std::size_t{1} << c));
        if (free_seen % 2 == 0) {
          total += sub;
        } else {
          total -= sub;
        }
      }
      ++free_seen;
    }
    memo[mask] = total;
    return total;
  };
  return rec(rec, 0);
}

// det(g_{lambda_i - i + j}) with g_r = 0 for r < 0 or r past the table.
template <class T>
T jacobi_trudi(const Partition& lambda, const std::vector<T>& g) {
  const int len = lambda.length();
  std::vector<std::vector<T>> m(static_cast<std::size_t>(len),
                                std::vector<T>(static_cast<std::size_t>(len), T(0)));
  for (int i = 0; i < len; ++i) {
    for (int j = 0; j < len; ++j) {
      int idx = lambda.part(i) - i + j;
      if (idx >= 0) {
        if (idx >= static_cast<int>(g.size())) throw std::out_of_range("Jacobi-Trudi table too short");
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = g[static_cast<std::size_t>(idx)];
      }
    }
  }
  return determinant(m);
}

// Sum over semistandard tableaux of shape lambda of x^content.
template <class T>
T schur_by_tableaux(const Partition& lambda, std::span<const T> x) {
  T total(0);
  for (const auto& t : enumerate_ssyt(lambda, static_cast<int>(x.size()))) {
    T term(1);
    for (const auto& row : t.rows()) {
      for (int v : row) term = term * x[static_cast<std::size_t>(v - 1)];
    }
    total += term;
  }
  return total;
}

template <class T>
T schur_by_jacobi_trudi(const Partition& lambda, std::span<const T> x) {
  auto h = complete_homogeneous<T>(x, lambda.part(0) + lambda.length());
  return jacobi_trudi(lambda, h);
}

// q_0 .. q_rmax from prod_i (1 + y_i t) / (1 - y_i t).
template <class T>
std::vector<T> stembridge_q(std::span<const T> y, int rmax) {
  std::vector<T> q(static_cast<std::size_t>(rmax) + 1, T(0));
  q[0] = T(1);
  for (const auto& yi : y) {
    // Multiply by 1 + 2 sum_{r>=1} yi^r t^r.
    std::vector<T> next = q;
    std::vector<T> ypow(static_cast<std::size_t>(rmax) + 1, T(1));
    for (int r = 1; r <= rmax; ++r) ypow[static_cast<std::size_t>(r)] = ypow[static_cast<std::size_t>(r - 1)] * yi;
    for (int r = 1; r <= rmax; ++r) {
      for (int s = 0; s + r <= rmax; ++s) {
        next[static_cast<std::size_t>(s + r)] += T(2) * ypow[static_cast<std::size_t>(r)] * q[static_cast<std::size_t>(s)];
      }
    }
    q = std::move(next);
  }
  return q;
}

template <class T>
T stembridge_S(const Partition& lambda, std::span<const T> y) {
  return jacobi_trudi(lambda, stembridge_q<T>(y, lambda.part(0) + lambda.length()));
}

// ---- numeric evaluations ---------------------------------------------------

Rational eval_power_sum(int r, std::span<const Rational> x);
Rational eval_power_sum(const Partition& lambda, std::span<const Rational> x);

// Tableau-sum definition of s_lambda.
Rational eval_schur(const Partition& lambda, std::span<const Rational> x);
Rational eval_schur_jacobi_trudi(const Partition& lambda, std::span<const Rational> x);

Rational eval_stembridge_S(const Partition& lambda, std::span<const Rational> y);

// Taylor coefficients h~_0..h~_kmax of e^{gamma z} prod (1+beta_i z)/(1-alpha_i z).
std::vector<Rational> extended_h(const ParamVector& p, int kmax);
Rational eval_extended_schur(const Partition& lambda, const ParamVector& p);
// p~_1 = sum alpha + sum beta + gamma; p~_n = sum alpha^n + (-1)^{n+1} sum beta^n.
Rational extended_power_sum(int n, const ParamVector& p);
Rational extended_power_sum(const Partition& lambda, const ParamVector& p);

// ---- Cauchy-type identities -------------------------------------------------

enum class CauchyKind { classic, dual, stembridge, dual_stembridge, extended };

std::string to_string(CauchyKind kind);
CauchyKind parse_cauchy_kind(std::string_view name);

// Left side minus right side, summed over |lambda| <= degree.  x occupies
// variables 0..nx-1 and y variables nx..nx+ny-1; the extended kind replaces
// the y side by the numeric parameters.
Poly cauchy_difference(CauchyKind kind, int degree, int nx, int ny,
                       const ParamVector& params = {});

bool check_cauchy_identity(CauchyKind kind, int degree, int nx, int ny,
                           const ParamVector& params = {});

}  // namespace symshuffle
