#pragma once

#include <gmpxx.h>

#include <string>

namespace symprod {

using Integer = mpz_class;
using Rational = mpq_class;

Integer factorial(unsigned long n);
Integer binomial(long n, long k);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

// Parses an optionally signed decimal integer; returns false on any other input.
bool parse_integer(const std::string& text, Integer& out);

}  // namespace symprod
