#pragma once

#include <vector>

#include "symshuffle/poly.hpp"

namespace symshuffle {

/// Power series in u truncated at u^order.  Coefficients are polynomials over
/// Q in the markers (variable 0 is t, variable i >= 1 is x_i).
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order = 0);
  TruncatedSeries(int order, std::vector<Poly> coefficients);
  static TruncatedSeries one(int order);
  // c u^n (zero when n > order).
  static TruncatedSeries term(int order, int n, const Poly& c);

  int order() const { return order_; }
  const Poly& operator[](int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
  Poly& operator[](int n) { return coeffs_[static_cast<std::size_t>(n)]; }
  const std::vector<Poly>& coefficients() const { return coeffs_; }

  // Coefficient of u^n * monomial.
  Rational coefficient(int n, const Monomial& m) const;

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const Poly& scalar);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Poly& s) { return a *= s; }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  // Coefficientwise marker operations.
  TruncatedSeries derivative(int var) const;
  TruncatedSeries substitute(int var, const Rational& value) const;
  TruncatedSeries truncated(int order) const;

 private:
  int order_;
  std::vector<Poly> coeffs_;
};

// Product truncated at the smaller order.  The parallel kernel splits work by
// output degree; the serial one is the reference.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul_serial(const TruncatedSeries& a, const TruncatedSeries& b);

// Throws std::domain_error unless the constant term is zero.
TruncatedSeries series_exp(const TruncatedSeries& s);
// Throws std::domain_error unless the constant term is exactly 1.
TruncatedSeries series_log(const TruncatedSeries& s);
// Throws std::domain_error unless the constant term is a nonzero rational.
TruncatedSeries series_inverse(const TruncatedSeries& s);
// Negative exponents go through series_inverse.
TruncatedSeries series_pow(const TruncatedSeries& s, long exponent);
// exp(e log s); constant term must be 1.
TruncatedSeries series_pow(const TruncatedSeries& s, const Rational& exponent);

}  // namespace symshuffle
