#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace wmk {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Canonical form: "n" when the denominator is 1, otherwise "n/d".
std::string to_string(const Rational& x);
std::string to_string(const BigInt& x);

/// Accepts "n", "-n" and "n/d"; the result is canonicalized.
Rational parse_rational(std::string_view text);

Rational make_rational(std::int64_t num, std::int64_t den = 1);

bool is_integer(const Rational& x);

/// floor/ceil of num/den for den > 0 (integer division rounding toward -inf / +inf).
constexpr std::int64_t floor_div(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

constexpr std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
  return -floor_div(-num, den);
}

/// base^exp for a small non-negative exponent, exact.
BigInt ipow(const BigInt& base, unsigned long exp);

/// q^e for any integer e as an exact rational.
Rational rpow(const Rational& base, long exp);

}  // namespace wmk
