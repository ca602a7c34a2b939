#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hypercat {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// n! as an exact integer.
BigInt factorial(unsigned long n);

/// Binomial coefficient C(n, k); zero when k > n.
BigInt binomial(unsigned long n, unsigned long k);
BigInt binomial(const BigInt& n, unsigned long k);

/// top! / (parts[0]! parts[1]! ... (top - sum parts)!).
/// Throws InvalidMultinomial when the parts sum past top.
BigInt multinomial(unsigned long top, std::span<const unsigned> parts);

/// Reduced rational from an integer pair (denominator need not be positive).
BigRat make_rational(BigInt num, BigInt den);

/// The value must be an integer; returns the numerator.
/// Throws Error otherwise.
BigInt to_integer(const BigRat& q);

BigRat pow(const BigRat& base, unsigned long exp);

/// 10^k as an exact integer.
BigInt pow10(unsigned long k);

/// Nearest rational with `digits` significant decimal digits (ties to even).
BigRat round_to_digits(const BigRat& x, unsigned digits);

/// Correctly rounded decimal rendering with `digits` significant digits,
/// ties to even, trailing zeros trimmed. Plain notation, no exponent.
std::string to_decimal_string(const BigRat& x, unsigned digits);

/// Parses "42", "-6", "3/4", "0.75", "1.5e-3" into an exact rational.
/// Throws Error on malformed input.
BigRat parse_rational(std::string_view text);

} // namespace hypercat
