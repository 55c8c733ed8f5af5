#include "symshuffle/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace symshuffle {

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '\t') s.push_back(c);
  }
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  if (auto dot = s.find('.'); dot != std::string::npos) {
    if (s.find('/') != std::string::npos) {
      throw std::invalid_argument("malformed rational literal: " + s);
    }
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    const auto scale = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+") {
      throw std::invalid_argument("malformed rational literal: " + s);
    }
    if (digits.front() == '+') digits.erase(0, 1);
    Integer num;
    if (num.set_str(digits, 10) != 0) {
      throw std::invalid_argument("malformed rational literal: " + s);
    }
    Rational r(num, pow(Integer(10), static_cast<unsigned>(scale)));
    r.canonicalize();
    return r;
  }

  if (s.front() == '+') s.erase(0, 1);
  Rational r;
  if (r.set_str(s, 10) != 0) {
    throw std::invalid_argument("malformed rational literal: " + s);
  }
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                     : comma - start);
    bool blank = piece.find_first_not_of(" \t") == std::string_view::npos;
    if (!blank) {
      out.push_back(parse_rational(piece));
    } else if (comma != std::string_view::npos || !out.empty()) {
      throw std::invalid_argument("empty entry in rational list");
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational r(1);
  Rational b = base;
  while (exponent != 0) {
    if (exponent & 1U) r *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return r;
}

Integer pow(const Integer& base, unsigned exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Integer multinomial(const std::vector<int>& parts) {
  int n = std::accumulate(parts.begin(), parts.end(), 0);
  Integer r = factorial(static_cast<unsigned>(n));
  for (int p : parts) r /= factorial(static_cast<unsigned>(p));
  return r;
}

}  // namespace symshuffle
