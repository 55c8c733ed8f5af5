#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "symshuffle/rational.hpp"

namespace symshuffle {

// Exponent vector indexed by variable number; trailing zeros are trimmed so
// that equal monomials always compare equal.
using Monomial = std::vector<int>;

Monomial make_monomial(std::vector<int> exponents);
Monomial monomial_product(const Monomial& a, const Monomial& b);
int monomial_degree(const Monomial& m);

/// Sparse multivariate polynomial with exact rational coefficients.
/// No zero coefficient is ever stored.
class Poly {
 public:
  using Terms = std::map<Monomial, Rational>;

  Poly() = default;
  Poly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Poly(long constant) : Poly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)
  Poly(int constant) : Poly(Rational(constant)) {}   // NOLINT(google-explicit-constructor)

  static Poly variable(int index, int power = 1);
  static Poly monomial(const Monomial& m, const Rational& coeff);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const { return coefficient({}); }
  int total_degree() const;
  // Number of variable slots used by the largest monomial.
  int variable_span() const;

  void add_term(const Monomial& m, const Rational& coeff);

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& scalar);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  Rational evaluate(std::span<const Rational> values) const;
  Poly substitute(int var, const Rational& value) const;
  Poly derivative(int var) const;
  // Drop every monomial of total degree above max_degree.
  Poly truncated(int max_degree) const;
  // Keep only monomials of exactly the given total degree.
  Poly homogeneous_part(int degree) const;

  // Variable names default to x0, x1, ...
  std::string to_string(const std::function<std::string(int)>& name = {}) const;

 private:
  Terms terms_;
};

Poly pow(const Poly& base, unsigned exponent);

}  // namespace symshuffle
