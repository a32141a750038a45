#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace interlace {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses a decimal integer or a fraction "p/q". Throws ParseError.
Rational parse_rational(const std::string& text);

std::string to_string(const BigInt& value);
std::string to_string(const Rational& value);

inline BigInt pow(const BigInt& base, unsigned long exponent) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

inline Rational pow(const Rational& base, unsigned long exponent) {
    Rational out(1);
    Rational b = base;
    while (exponent != 0) {
        if (exponent & 1U) out *= b;
        exponent >>= 1U;
        if (exponent != 0) b *= b;
    }
    return out;
}

}  // namespace interlace
