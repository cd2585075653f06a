#pragma once

#include <string>

#include "residua/int128.hpp"

namespace residua {

/// Exact nonnegative rational, normalized, den > 0. Used for the
/// epsilon parameter and for exponent arithmetic in threshold checks.
struct Rational {
    i64 num = 0;
    i64 den = 1;

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

/// Parses "a/b", a decimal like "0.3", or an integer. Denominators are
/// limited to 10^4 after normalization.
Rational parse_rational(const std::string& text);

Rational normalize(Rational r);

/// Exact comparison x^a < y^b (early-out via bit lengths and floating
/// logs; exact big-integer powers when the margin is thin).
bool pow_less(u128 x, u64 a, u128 y, u64 b);

/// floor(p^(num/den)) for positive rational exponents, clamped to
/// [1, clamp_max]; exact at integer boundaries.
u64 floor_pow(u64 p, i64 num, i64 den, u64 clamp_max);

}  // namespace residua
