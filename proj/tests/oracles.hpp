// Brute-force reference implementations used only by the tests.  They are
// written from the definitions and share no code with the library kernels.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "symshuffle/poly.hpp"
#include "symshuffle/rational.hpp"

namespace oracle {

using symshuffle::Integer;
using symshuffle::Poly;
using symshuffle::Rational;
using Perm = std::vector<int>;
using Shape = std::vector<int>;
using Dist = std::map<Perm, Rational>;

enum class Scheme { riffle, signed_, abg };

inline std::vector<std::vector<int>> words(const std::vector<int>& letters, int n) {
  std::vector<std::vector<int>> out{{}};
  for (int pos = 0; pos < n; ++pos) {
    std::vector<std::vector<int>> next;
    for (const auto& w : out) {
      for (int l : letters) {
        next.push_back(w);
        next.back().push_back(l);
      }
    }
    out = std::move(next);
  }
  return out;
}

inline std::vector<Perm> perms(int n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline Rational factorial(int n) {
  Rational f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Values go to positions block by block.  Within a block positions are
// visited left to right, or right to left for a decreasing block.
// The zero block (abg) contributes every ordering with weight 1/r!.
inline std::vector<std::pair<Perm, Rational>> word_perms(const std::vector<int>& word, Scheme scheme) {
  const int n = static_cast<int>(word.size());
  auto block_rank = [scheme](int l) {
    if (scheme == Scheme::signed_) return 2L * std::abs(l) + (l < 0 ? 1 : 0);
    return static_cast<long>(l);
  };
  std::map<long, std::vector<int>> blocks;
  for (int i = 0; i < n; ++i) blocks[block_rank(word[static_cast<std::size_t>(i)])].push_back(i);

  std::vector<std::pair<Perm, Rational>> out{{Perm(static_cast<std::size_t>(n), 0), Rational(1)}};
  int next_value = 1;
  for (auto& [rank, positions] : blocks) {
    const int letter = word[static_cast<std::size_t>(positions.front())];
    const bool decreasing = letter < 0;
    if (scheme == Scheme::abg && letter == 0) {
      std::vector<int> values(positions.size());
      std::iota(values.begin(), values.end(), next_value);
      std::vector<std::pair<Perm, Rational>> expanded;
      const Rational w = 1 / factorial(static_cast<int>(values.size()));
      for (const auto& [p, weight] : out) {
        std::vector<int> v = values;
        do {
          Perm q = p;
          for (std::size_t t = 0; t < positions.size(); ++t) q[static_cast<std::size_t>(positions[t])] = v[t];
          expanded.emplace_back(std::move(q), weight * w);
        } while (std::next_permutation(v.begin(), v.end()));
      }
      out = std::move(expanded);
    } else {
      if (decreasing) std::reverse(positions.begin(), positions.end());
      for (auto& [p, weight] : out) {
        int v = next_value;
        for (int pos : positions) p[static_cast<std::size_t>(pos)] = v++;
      }
    }
    next_value += static_cast<int>(positions.size());
  }
  return out;
}

inline Dist distribution(const std::vector<std::pair<int, Rational>>& alphabet, int n, Scheme scheme) {
  std::vector<int> letters;
  std::map<int, Rational> prob;
  for (const auto& [l, p] : alphabet) {
    letters.push_back(l);
    prob[l] = p;
  }
  Dist d;
  for (const auto& w : words(letters, n)) {
    Rational pw = 1;
    for (int l : w) pw *= prob[l];
    for (const auto& [perm, weight] : word_perms(w, scheme)) d[perm] += pw * weight;
  }
  return d;
}

// Value reversal v -> n+1-v.
inline Dist complement(const Dist& d) {
  Dist out;
  for (const auto& [p, w] : d) {
    Perm q = p;
    for (auto& v : q) v = static_cast<int>(p.size()) + 1 - v;
    out[q] += w;
  }
  return out;
}

inline Shape cycle_type(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  Shape c;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j] - 1)) {
      seen[j] = true;
      ++len;
    }
    c.push_back(len);
  }
  std::sort(c.rbegin(), c.rend());
  return c;
}

inline int fixed_points(const Perm& p) {
  int f = 0;
  for (std::size_t i = 0; i < p.size(); ++i) f += p[i] == static_cast<int>(i) + 1;
  return f;
}

// Schensted row insertion on a permutation; returns the recording tableau rows.
inline std::vector<std::vector<int>> recording(const Perm& p) {
  std::vector<std::vector<int>> P, Q;
  for (std::size_t step = 0; step < p.size(); ++step) {
    int x = p[step];
    std::size_t r = 0;
    for (;; ++r) {
      if (r == P.size()) {
        P.push_back({x});
        Q.push_back({static_cast<int>(step) + 1});
        break;
      }
      auto it = std::upper_bound(P[r].begin(), P[r].end(), x);
      if (it == P[r].end()) {
        P[r].push_back(x);
        Q[r].push_back(static_cast<int>(step) + 1);
        break;
      }
      std::swap(x, *it);
    }
  }
  return Q;
}

inline Shape shape_of(const std::vector<std::vector<int>>& t) {
  Shape s;
  for (const auto& row : t) s.push_back(static_cast<int>(row.size()));
  return s;
}

template <class F>
std::map<Shape, Rational> marginal(const Dist& d, F key) {
  std::map<Shape, Rational> out;
  for (const auto& [p, w] : d) out[key(p)] += w;
  return out;
}

inline Shape conjugate(const Shape& s) {
  Shape c;
  for (int j = 0; !s.empty() && j < s.front(); ++j) {
    int len = 0;
    for (int part : s) len += part > j;
    c.push_back(len);
  }
  return c;
}

inline std::vector<Shape> partitions(int n, int max_part = -1) {
  if (max_part < 0) max_part = n;
  if (n == 0) return {{}};
  std::vector<Shape> out;
  for (int first = std::min(n, max_part); first >= 1; --first) {
    for (auto rest : partitions(n - first, first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  }
  return out;
}

// Number of standard tableaux, by removing the cell holding the largest entry.
inline Integer syt_count(Shape s) {
  while (!s.empty() && s.back() == 0) s.pop_back();
  if (s.empty()) return 1;
  static std::map<Shape, Integer> memo;
  if (auto it = memo.find(s); it != memo.end()) return it->second;
  Integer total = 0;
  for (std::size_t r = 0; r < s.size(); ++r) {
    if (r + 1 == s.size() || s[r] > s[r + 1]) {
      Shape t = s;
      --t[r];
      total += syt_count(t);
    }
  }
  memo[s] = total;
  return total;
}

// Fill the cells of a shape row by row from an ordered alphabet, keeping fillings
// accepted by `ok(filling, row, col, value)`; calls visit on each complete filling.
inline void fillings(const Shape& s, const std::vector<int>& alphabet,
                     const std::function<bool(const std::vector<std::vector<int>>&, int, int, int)>& ok,
                     const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
  std::vector<std::vector<int>> t;
  for (int part : s) t.emplace_back(static_cast<std::size_t>(part), 0);
  std::vector<std::pair<int, int>> cells;
  for (std::size_t r = 0; r < s.size(); ++r) {
    for (int c = 0; c < s[r]; ++c) cells.emplace_back(static_cast<int>(r), c);
  }
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == cells.size()) {
      visit(t);
      return;
    }
    const auto [r, c] = cells[idx];
    for (int v : alphabet) {
      if (!ok(t, r, c, v)) continue;
      t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
      rec(idx + 1);
    }
  };
  rec(0);
}

inline int at(const std::vector<std::vector<int>>& t, int r, int c) {
  return t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
}

// Semistandard tableaux with the given content (composition).
inline Integer kostka(const Shape& s, const std::vector<int>& content) {
  std::vector<int> alphabet;
  for (std::size_t i = 0; i < content.size(); ++i) alphabet.push_back(static_cast<int>(i) + 1);
  Integer count = 0;
  fillings(
      s, alphabet,
      [](const auto& t, int r, int c, int v) {
        if (c > 0 && at(t, r, c - 1) > v) return false;
        if (r > 0 && at(t, r - 1, c) >= v) return false;
        return true;
      },
      [&](const auto& t) {
        std::vector<int> seen(content.size(), 0);
        for (const auto& row : t) {
          for (int v : row) ++seen[static_cast<std::size_t>(v - 1)];
        }
        if (seen == content) ++count;
      });
  return count;
}

// Sum over tableaux on +-1..+-k (order 1 < -1 < 2 < ...) weakly increasing in
// rows and columns, positive letters at most once per column, negative letters
// at most once per row, of prod y_{|entry|}.
inline Rational stembridge_by_tableaux(const Shape& s, const std::vector<Rational>& y) {
  std::vector<int> alphabet;
  for (int i = 1; i <= static_cast<int>(y.size()); ++i) {
    alphabet.push_back(i);
    alphabet.push_back(-i);
  }
  auto key = [](int v) { return 2 * std::abs(v) + (v < 0 ? 1 : 0); };
  Rational total = 0;
  fillings(
      s, alphabet,
      [&](const auto& t, int r, int c, int v) {
        if (c > 0) {
          const int left = at(t, r, c - 1);
          if (key(left) > key(v) || (left == v && v < 0)) return false;
        }
        if (r > 0) {
          const int up = at(t, r - 1, c);
          if (key(up) > key(v) || (up == v && v > 0)) return false;
        }
        return true;
      },
      [&](const auto& t) {
        Rational w = 1;
        for (const auto& row : t) {
          for (int v : row) w *= y[static_cast<std::size_t>(std::abs(v) - 1)];
        }
        total += w;
      });
  return total;
}

// Determinant by Gaussian elimination over Q.
inline Rational det(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational d = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      d = -d;
    }
    d *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return d;
}

inline Rational power(const Rational& b, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// s_lambda(x) = det(x_i^{lambda_j + m - j}) / det(x_i^{m - j}); x distinct.
inline Rational schur_bialternant(const Shape& s, const std::vector<Rational>& x) {
  const std::size_t m = x.size();
  if (s.size() > m) return 0;
  std::vector<std::vector<Rational>> num(m, std::vector<Rational>(m)), den = num;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const int part = j < s.size() ? s[j] : 0;
      num[i][j] = power(x[i], part + static_cast<int>(m - j - 1));
      den[i][j] = power(x[i], static_cast<int>(m - j - 1));
    }
  }
  return det(num) / det(den);
}

// Coefficients of e^{gamma z} prod (1 + beta z) / prod (1 - alpha z) up to z^kmax.
inline std::vector<Rational> extended_h(const std::vector<Rational>& alpha, const std::vector<Rational>& beta,
                                        const Rational& gamma, int kmax) {
  std::vector<Rational> h(static_cast<std::size_t>(kmax) + 1, 0);
  for (int k = 0; k <= kmax; ++k) h[static_cast<std::size_t>(k)] = power(gamma, k) / factorial(k);
  auto multiply = [&](const std::vector<Rational>& f) {
    std::vector<Rational> out(h.size(), 0);
    for (std::size_t a = 0; a < h.size(); ++a) {
      for (std::size_t b = 0; a + b < h.size() && b < f.size(); ++b) out[a + b] += h[a] * f[b];
    }
    h = std::move(out);
  };
  for (const auto& b : beta) multiply({1, b});
  for (const auto& a : alpha) {
    std::vector<Rational> geo(h.size());
    for (std::size_t k = 0; k < geo.size(); ++k) geo[k] = power(a, static_cast<int>(k));
    multiply(geo);
  }
  return h;
}

inline Rational extended_schur(const Shape& s, const std::vector<Rational>& alpha, const std::vector<Rational>& beta,
                               const Rational& gamma) {
  const int n = static_cast<int>(s.size());
  int total = 0;
  for (int p : s) total += p;
  const auto h = extended_h(alpha, beta, gamma, total + n);
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int idx = s[static_cast<std::size_t>(i)] - i + j;
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = idx < 0 ? Rational(0) : h[static_cast<std::size_t>(idx)];
    }
  }
  return det(m);
}

// Truncated product helpers on Poly, dropping total degree above `degree`.
inline Poly truncated_mul(const Poly& a, const Poly& b, int degree) { return (a * b).truncated(degree); }

inline Poly geometric(const Poly& z, int degree) {  // 1/(1-z), z homogeneous of positive degree
  Poly out(1), term(1);
  for (int k = 1; k <= degree; ++k) {
    term = truncated_mul(term, z, degree);
    if (term.is_zero()) break;
    out += term;
  }
  return out;
}

}  // namespace oracle
