#include "symshuffle/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace symshuffle {

Monomial make_monomial(std::vector<int> exponents) {
  while (!exponents.empty() && exponents.back() == 0) exponents.pop_back();
  for (int e : exponents) {
    if (e < 0) throw std::invalid_argument("negative exponent in monomial");
  }
  return exponents;
}

Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

int monomial_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

Poly::Poly(const Rational& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Poly Poly::variable(int index, int power) {
  if (index < 0 || power < 0) throw std::invalid_argument("bad variable index or power");
  Monomial m(static_cast<std::size_t>(index) + 1, 0);
  m[static_cast<std::size_t>(index)] = power;
  return monomial(make_monomial(std::move(m)), 1);
}

Poly Poly::monomial(const Monomial& m, const Rational& coeff) {
  Poly p;
  p.add_term(make_monomial(m), coeff);
  return p;
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(make_monomial(m));
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
  return d;
}

int Poly::variable_span() const {
  std::size_t s = 0;
  for (const auto& [m, c] : terms_) s = std::max(s, m.size());
  return static_cast<int>(s);
}

void Poly::add_term(const Monomial& m, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      out.add_term(monomial_product(ma, mb), ca * cb);
    }
  }
  return out;
}

Poly& Poly::operator*=(const Poly& other) {
  *this = *this * other;
  return *this;
}

Poly& Poly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Rational Poly::evaluate(std::span<const Rational> values) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (i >= values.size()) throw std::out_of_range("too few values for polynomial evaluation");
      term *= symshuffle::pow(values[i], static_cast<unsigned>(m[i]));
    }
    total += term;
  }
  return total;
}

Poly Poly::substitute(int var, const Rational& value) const {
  Poly out;
  const auto v = static_cast<std::size_t>(var);
  for (const auto& [m, c] : terms_) {
    if (v >= m.size() || m[v] == 0) {
      out.add_term(m, c);
      continue;
    }
    Monomial rest = m;
    rest[v] = 0;
    out.add_term(make_monomial(std::move(rest)), c * symshuffle::pow(value, static_cast<unsigned>(m[v])));
  }
  return out;
}

Poly Poly::derivative(int var) const {
  Poly out;
  const auto v = static_cast<std::size_t>(var);
  for (const auto& [m, c] : terms_) {
    if (v >= m.size() || m[v] == 0) continue;
    Monomial d = m;
    d[v] -= 1;
    out.add_term(make_monomial(std::move(d)), c * m[v]);
  }
  return out;
}

Poly Poly::truncated(int max_degree) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    if (monomial_degree(m) <= max_degree) out.terms_.emplace(m, c);
  }
  return out;
}

Poly Poly::homogeneous_part(int degree) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    if (monomial_degree(m) == degree) out.terms_.emplace(m, c);
  }
  return out;
}

std::string Poly::to_string(const std::function<std::string(int)>& name) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = c;
    if (c < 0) {
      os << (first ? "-" : " - ");
      mag = -c;
    } else if (!first) {
      os << " + ";
    }
    first = false;
    bool has_vars = monomial_degree(m) > 0;
    if (!has_vars || mag != 1) os << mag.get_str();
    bool need_star = has_vars && mag != 1;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (need_star) os << '*';
      need_star = true;
      os << (name ? name(static_cast<int>(i)) : "x" + std::to_string(i));
      if (m[i] > 1) os << '^' << m[i];
    }
  }
  return os.str();
}

Poly pow(const Poly& base, unsigned exponent) {
  Poly r(1);
  Poly b = base;
  while (exponent != 0) {
    if (exponent & 1U) r = r * b;
    exponent >>= 1U;
    if (exponent != 0) b = b * b;
  }
  return r;
}

}  // namespace symshuffle
