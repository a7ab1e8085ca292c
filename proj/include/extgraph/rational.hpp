#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace extgraph {

using BigInt = mpz_class;
using Rational = mpq_class;

// Parses an integer literal or "p/q" with q > 0. Returns false on malformed input.
bool try_parse_rational(std::string_view text, Rational& out);

// Canonical "p/q" (or "p" when the denominator is 1).
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

double to_double(const Rational& q);

// Natural log of a positive rational without overflow for huge numerators.
double log_of(const Rational& q);

// Closest dyadic rational with the given number of fractional bits.
Rational dyadic_round(double value, int bits);

BigInt lcm_of_denominators(const std::vector<Rational>& values);

Rational sum(const std::vector<Rational>& values);

}  // namespace extgraph
