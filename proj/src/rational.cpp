#include "residua/rational.hpp"

#include <cmath>
#include <numeric>
#include <vector>

#include "residua/errors.hpp"

namespace residua {

namespace {

constexpr i64 kMaxDen = 10000;

// little-endian base-2^64 magnitude, just enough for power comparisons
struct BigUint {
    std::vector<u64> limbs;

    static BigUint from_u128(u128 v) {
        BigUint r;
        r.limbs.push_back(static_cast<u64>(v));
        if (v >> 64) r.limbs.push_back(static_cast<u64>(v >> 64));
        return r;
    }

    void trim() {
        while (limbs.size() > 1 && limbs.back() == 0) limbs.pop_back();
    }

    BigUint mul(const BigUint& other) const {
        BigUint r;
        r.limbs.assign(limbs.size() + other.limbs.size(), 0);
        for (size_t i = 0; i < limbs.size(); ++i) {
            u64 carry = 0;
            for (size_t j = 0; j < other.limbs.size(); ++j) {
                u128 cur = static_cast<u128>(limbs[i]) * other.limbs[j] + r.limbs[i + j] + carry;
                r.limbs[i + j] = static_cast<u64>(cur);
                carry = static_cast<u64>(cur >> 64);
            }
            size_t k = i + other.limbs.size();
            while (carry != 0) {
                u128 cur = static_cast<u128>(r.limbs[k]) + carry;
                r.limbs[k] = static_cast<u64>(cur);
                carry = static_cast<u64>(cur >> 64);
                ++k;
            }
        }
        r.trim();
        return r;
    }

    // -1, 0, 1
    int compare(const BigUint& other) const {
        if (limbs.size() != other.limbs.size())
            return limbs.size() < other.limbs.size() ? -1 : 1;
        for (size_t i = limbs.size(); i-- > 0;) {
            if (limbs[i] != other.limbs[i]) return limbs[i] < other.limbs[i] ? -1 : 1;
        }
        return 0;
    }
};

BigUint big_pow(u128 base, u64 exp) {
    BigUint result = BigUint::from_u128(1);
    BigUint b = BigUint::from_u128(base);
    while (exp > 0) {
        if (exp & 1) result = result.mul(b);
        b = b.mul(b);
        exp >>= 1;
    }
    return result;
}

}  // namespace

Rational normalize(Rational r) {
    if (r.den == 0) throw domain_error("rational with zero denominator");
    if (r.den < 0) {
        r.den = -r.den;
        r.num = -r.num;
    }
    i64 g = std::gcd(r.num < 0 ? -r.num : r.num, r.den);
    if (g > 1) {
        r.num /= g;
        r.den /= g;
    }
    if (r.den > kMaxDen)
        throw domain_error("rational denominator above " + std::to_string(kMaxDen) +
                           " (use at most 4 decimal places)");
    return r;
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw domain_error("empty rational");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        i64 num = std::stoll(text.substr(0, slash));
        i64 den = std::stoll(text.substr(slash + 1));
        return normalize({num, den});
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        size_t places = text.size() - dot - 1;
        if (places > 4) throw domain_error("at most 4 decimal places supported");
        i64 num = std::stoll(digits);
        i64 den = 1;
        for (size_t i = 0; i < places; ++i) den *= 10;
        return normalize({num, den});
    }
    return normalize({std::stoll(text), 1});
}

bool pow_less(u128 x, u64 a, u128 y, u64 b) {
    if (x == 0) return !(y == 0 || b == 0);
    if (y == 0) return false;
    if (a == 0) return b != 0 && y > 1;
    if (b == 0) return false;  // x^a >= 1 = y^0

    // bit-length bounds: 2^(bl-1) <= v < 2^bl
    const u64 blx = static_cast<u64>(bit_length(x));
    const u64 bly = static_cast<u64>(bit_length(y));
    if (a * blx <= b * (bly - 1)) return true;
    if (a * (blx - 1) >= b * bly) return false;

    const long double lx = a * log2l(static_cast<long double>(x));
    const long double ly = b * log2l(static_cast<long double>(y));
    if (lx < ly - 1e-6L) return true;
    if (lx > ly + 1e-6L) return false;

    return big_pow(x, a).compare(big_pow(y, b)) < 0;
}

u64 floor_pow(u64 p, i64 num, i64 den, u64 clamp_max) {
    if (num <= 0 || den <= 0) throw domain_error("floor_pow requires a positive exponent");
    if (p == 0) return 0;
    long double est = expl(logl(static_cast<long double>(p)) * num / den);
    u64 t = est >= static_cast<long double>(clamp_max) ? clamp_max : static_cast<u64>(est);
    if (t < 1) t = 1;
    // nudge to the exact floor: t <= p^(num/den) < t+1
    while (t > 1 && pow_less(p, static_cast<u64>(num), t, static_cast<u64>(den))) --t;
    while (t < clamp_max && !pow_less(p, static_cast<u64>(num), t + 1, static_cast<u64>(den))) ++t;
    return t;
}

}  // namespace residua
