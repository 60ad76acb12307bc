#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace hk {

/// Arbitrary precision rational, always kept in lowest terms with a
/// positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long long num, long long den = 1);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& r);
/// Throws NotRational if r is not an integer or does not fit in 64 bits.
long long to_int64(const Rational& r);

}  // namespace hk
