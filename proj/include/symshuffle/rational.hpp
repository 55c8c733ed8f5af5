#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace symshuffle {

using Integer = mpz_class;
using Rational = mpq_class;

// Reduced "p/q" form; integers print without a denominator.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

// Accepts "p/q", "p", or a terminating decimal such as "0.25".
Rational parse_rational(std::string_view text);

// Comma-separated list of rationals; empty input yields an empty list.
std::vector<Rational> parse_rational_list(std::string_view text);

Integer factorial(unsigned n);
Integer binomial(long n, long k);
Rational pow(const Rational& base, unsigned exponent);
Integer pow(const Integer& base, unsigned exponent);

// Exact multinomial n! / prod(parts!).
Integer multinomial(const std::vector<int>& parts);

}  // namespace symshuffle
