#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace deltarep {

/// Exact rational, always kept in lowest terms with a positive denominator.
using Rat = mpq_class;
using BigInt = mpz_class;

/// Builds num/den and canonicalizes. Throws std::invalid_argument on den == 0.
Rat make_rat(const BigInt& num, const BigInt& den);
Rat make_rat(std::int64_t num, std::int64_t den = 1);

/// 3^n (or base^n) as an exact integer.
BigInt ipow(unsigned base, unsigned n);

/// Renders `num/den`, always with the slash ("3/2", "1/1", "0/1").
std::string to_string(const Rat& q);

/// Accepts `a/b`, an integer, or a plain decimal ("0.25", "-1.5e-3" is not
/// accepted). Decimals are converted exactly. Throws std::invalid_argument.
Rat parse_rat(std::string_view text);

/// True when the text is written as a decimal with a fractional part.
bool is_decimal_literal(std::string_view text);

/// Double approximation (truncated toward zero, within one ulp).
double to_double(const Rat& q);

/// Exact conversion of a finite double.
Rat from_double(double x);

}  // namespace deltarep
