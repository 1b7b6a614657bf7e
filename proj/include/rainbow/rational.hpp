#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace rainbow {

/// Exact rational number. All graph metrics that admit exact values are
/// computed and reported in this type; floats appear only where a
/// transcendental constant forces them.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Canonical rational from machine integers (den > 0, gcd reduced).
Rational make_rational(long num, long den = 1);

/// Canonical rational from big integers.
Rational make_rational(const BigInt& num, const BigInt& den);

/// Parses "num/den" or "num". Throws ParseError on malformed text or a
/// zero/negative denominator.
Rational parse_rational(const std::string& text);

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& q);

/// Smallest integer >= q.
BigInt ceil_rational(const Rational& q);

bool is_integer(const Rational& q);

bool fits_int64(const BigInt& z);

/// Requires fits_int64(z).
std::int64_t to_int64(const BigInt& z);

/// base^exp, exact.
Rational pow_rational(const Rational& base, unsigned long exp);

/// base^exp for big integer base.
BigInt pow_bigint(const BigInt& base, unsigned long exp);

}  // namespace rainbow
