#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace rankone {

/// Parses "p/q" or an integer string into a canonical rational.
/// Throws Error(InvalidArgument) on malformed input or a zero denominator.
mpq_class parse_rational(std::string_view text);

std::string to_string(const mpq_class& q);
std::string to_string(const mpz_class& z);

/// q^e for a (possibly negative) machine exponent.
mpq_class pow(const mpq_class& base, long exponent);
mpq_class pow(const mpq_class& base, const mpz_class& exponent);

/// Exact n-th root of q when q is the n-th power of a rational; for odd n
/// negative q are allowed and yield the negative real root.
std::optional<mpq_class> exact_root(const mpq_class& q, unsigned long n);

int sign(const mpq_class& q);

mpz_class lcm(const mpz_class& a, const mpz_class& b);

}  // namespace rankone
