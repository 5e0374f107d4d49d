#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace indep
{
    using BigInt = mpz_class;

    /// Exact rational; GMP keeps it canonical (lowest terms, positive denominator).
    using Rational = mpq_class;

    /// Accepts "p/q", "p" or a finite decimal such as "0.5".
    auto parse_rational(std::string_view text) -> Rational;

    /// "p/q", or "p" when the denominator is 1.
    auto to_string(const Rational & q) -> std::string;
    auto to_string(const BigInt & z) -> std::string;

    auto pow(const Rational & base, unsigned long exponent) -> Rational;
    auto pow(const BigInt & base, unsigned long exponent) -> BigInt;

    /// log2 of a positive value; accurate to double precision even when the
    /// value does not fit in a double. Zero maps to -infinity.
    auto log2_of(const BigInt & z) -> double;
    auto log2_of(const Rational & q) -> double;
}
