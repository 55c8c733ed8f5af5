#include "symshuffle/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace symshuffle {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) throw std::invalid_argument("series orders differ");
}

bool constant_rational(const Poly& p) { return p.is_zero() || (p.size() == 1 && p.total_degree() == 0); }

}  // namespace

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncatedSeries::TruncatedSeries(int order, std::vector<Poly> coefficients) : TruncatedSeries(order) {
  const std::size_t keep = std::min(coefficients.size(), coeffs_.size());
  std::move(coefficients.begin(), coefficients.begin() + static_cast<long>(keep), coeffs_.begin());
}

TruncatedSeries TruncatedSeries::one(int order) { return term(order, 0, Poly(1)); }

TruncatedSeries TruncatedSeries::term(int order, int n, const Poly& c) {
  TruncatedSeries s(order);
  if (n >= 0 && n <= order) s[n] = c;
  return s;
}

Rational TruncatedSeries::coefficient(int n, const Monomial& m) const {
  if (n < 0 || n > order_) return 0;
  return coeffs_[static_cast<std::size_t>(n)].coefficient(m);
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  require_same_order(*this, other);
  for (int n = 0; n <= order_; ++n) (*this)[n] += other[n];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  require_same_order(*this, other);
  for (int n = 0; n <= order_; ++n) (*this)[n] -= other[n];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Poly& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

TruncatedSeries TruncatedSeries::derivative(int var) const {
  TruncatedSeries out(order_);
  for (int n = 0; n <= order_; ++n) out[n] = (*this)[n].derivative(var);
  return out;
}

TruncatedSeries TruncatedSeries::substitute(int var, const Rational& value) const {
  TruncatedSeries out(order_);
  for (int n = 0; n <= order_; ++n) out[n] = (*this)[n].substitute(var, value);
  return out;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  return TruncatedSeries(order, std::vector<Poly>(coeffs_.begin(), coeffs_.begin() + std::min(order, order_) + 1));
}

TruncatedSeries series_mul_serial(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int order = std::min(a.order(), b.order());
  TruncatedSeries out(order);
  for (int n = 0; n <= order; ++n) {
    for (int k = 0; k <= n; ++k) {
      if (!a[k].is_zero() && !b[n - k].is_zero()) out[n] += a[k] * b[n - k];
    }
  }
  return out;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int order = std::min(a.order(), b.order());
  TruncatedSeries out(order);
  // Each output degree is summed in the same order as the serial kernel.
#pragma omp parallel for schedule(dynamic, 1)
  for (int n = order; n >= 0; --n) {
    Poly acc;
    for (int k = 0; k <= n; ++k) {
      if (!a[k].is_zero() && !b[n - k].is_zero()) acc += a[k] * b[n - k];
    }
    out[n] = std::move(acc);
  }
  return out;
}

TruncatedSeries series_exp(const TruncatedSeries& s) {
  if (!s[0].is_zero()) throw std::domain_error("series_exp needs a zero constant term");
  const int order = s.order();
  TruncatedSeries f(order);
  f[0] = Poly(1);
  // n f_n = sum_{k=1}^{n} k s_k f_{n-k}
  for (int n = 1; n <= order; ++n) {
    Poly acc;
    for (int k = 1; k <= n; ++k) {
      if (!s[k].is_zero() && !f[n - k].is_zero()) acc += s[k] * f[n - k] * Rational(k);
    }
    f[n] = acc * Rational(1, n);
  }
  return f;
}

TruncatedSeries series_log(const TruncatedSeries& s) {
  if (s[0] != Poly(1)) throw std::domain_error("series_log needs constant term 1");
  const int order = s.order();
  TruncatedSeries f(order);
  // s_n = (1/n) sum_{k=1}^{n} k f_k s_{n-k}
  for (int n = 1; n <= order; ++n) {
    Poly acc;
    for (int k = 1; k < n; ++k) {
      if (!f[k].is_zero() && !s[n - k].is_zero()) acc += f[k] * s[n - k] * Rational(k);
    }
    f[n] = s[n] - acc * Rational(1, n);
  }
  return f;
}

TruncatedSeries series_inverse(const TruncatedSeries& s) {
  if (s[0].is_zero() || !constant_rational(s[0])) {
    throw std::domain_error("series_inverse needs a nonzero rational constant term");
  }
  const Rational inv0 = 1 / s[0].constant_term();
  const int order = s.order();
  TruncatedSeries b(order);
  b[0] = Poly(inv0);
  for (int n = 1; n <= order; ++n) {
    Poly acc;
    for (int k = 1; k <= n; ++k) {
      if (!s[k].is_zero() && !b[n - k].is_zero()) acc += s[k] * b[n - k];
    }
    b[n] = acc * Rational(-inv0);
  }
  return b;
}

TruncatedSeries series_pow(const TruncatedSeries& s, long exponent) {
  TruncatedSeries base = exponent < 0 ? series_inverse(s) : s;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  TruncatedSeries result = TruncatedSeries::one(s.order());
  while (e > 0) {
    if (e & 1UL) result = series_mul(result, base);
    e >>= 1U;
    if (e > 0) base = series_mul(base, base);
  }
  return result;
}

TruncatedSeries series_pow(const TruncatedSeries& s, const Rational& exponent) {
  if (exponent.get_den() == 1 && exponent.get_num().fits_slong_p()) {
    return series_pow(s, exponent.get_num().get_si());
  }
  return series_exp(series_log(s) * Poly(exponent));
}

}  // namespace symshuffle
