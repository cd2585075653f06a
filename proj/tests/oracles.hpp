#pragma once

// Independent brute-force reference implementations used as test
// oracles. Everything here is deliberately written by the most naive
// route available and shares no code path with the library internals
// it checks.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "residua/int128.hpp"

namespace oracle {

using residua::i64;
using residua::u128;
using residua::u64;

// trial division, the slow and obvious way
inline bool is_prime_td(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

inline std::vector<u64> primes_td(u64 limit) {
    std::vector<u64> out;
    for (u64 n = 2; n <= limit; ++n) {
        if (is_prime_td(n)) out.push_back(n);
    }
    return out;
}

inline std::vector<std::pair<u128, unsigned>> factorize_td(u128 n) {
    std::vector<std::pair<u128, unsigned>> out;
    for (u128 d = 2; d * d <= n; ++d) {
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e) out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

// repeated multiplication, no squaring tricks
inline u64 powmod_naive(u64 base, u64 exp, u64 mod) {
    u64 r = 1 % mod;
    base %= mod;
    for (u64 i = 0; i < exp; ++i) r = (static_cast<u128>(r) * base) % mod;
    return r;
}

inline std::optional<u64> sqrt_mod_naive(u64 a, u64 p) {
    a %= p;
    std::optional<u64> best;
    for (u64 x = 0; x < p; ++x) {
        if ((static_cast<u128>(x) * x) % p == a) {
            if (!best || x < *best) best = x;
        }
    }
    return best;
}

// exhaustive search for 4p = L^2 + 27M^2 / p = L^2 + 4M^2; returns all
// positive solutions so uniqueness can be asserted
inline std::vector<std::pair<u64, u64>> representations_exhaustive(u64 p, bool cubic) {
    std::vector<std::pair<u64, u64>> found;
    const u128 target = cubic ? static_cast<u128>(4) * p : static_cast<u128>(p);
    const u64 coeff = cubic ? 27 : 4;
    for (u64 m = 1; static_cast<u128>(coeff) * m * m < target; ++m) {
        const u128 rest = target - static_cast<u128>(coeff) * m * m;
        const u64 l = static_cast<u64>(std::sqrt(static_cast<double>(rest)));
        for (u64 cand = l > 1 ? l - 1 : 0; cand <= l + 1; ++cand) {
            if (cand > 0 && static_cast<u128>(cand) * cand == rest) found.emplace_back(cand, m);
        }
    }
    return found;
}

// k-th power residue by enumerating all k-th powers mod p
inline bool kth_power_residue_enum(u64 q, u64 p, int k) {
    const u64 target = q % p;
    for (u64 x = 1; x < p; ++x) {
        u64 v = 1;
        for (int i = 0; i < k; ++i) v = (static_cast<u128>(v) * x) % p;
        if (v == target) return true;
    }
    return false;
}

struct FormTriple {
    u64 a;
    i64 b;
    u64 c;
    bool operator==(const FormTriple& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator<(const FormTriple& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
};

// reduced forms of discriminant -p via odd |b| and divisor scans of
// (b^2 + p)/4 -- structurally different from solving for c over an
// (a, b) grid
inline std::vector<FormTriple> reduced_forms_divisor_scan(u64 p) {
    std::vector<FormTriple> out;
    for (u64 babs = 1; 3 * babs * babs <= p; babs += 2) {
        const u64 num = (babs * babs + p) / 4;
        for (u64 a = babs; a * a <= num; ++a) {
            if (a < babs || num % a != 0) continue;
            const u64 c = num / a;
            if (c < a) continue;
            // sign rules: b >= 0 when |b| = a or a = c
            out.push_back(FormTriple{a, static_cast<i64>(babs), c});
            if (babs != a && a != c) out.push_back(FormTriple{a, -static_cast<i64>(babs), c});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Dirichlet-style class number for discriminant -p, p = 3 (mod 4),
// p > 3: h = (#QR - #QNR in [1, (p-1)/2]) / (2 - (2|p))
inline u64 class_number_legendre(u64 p) {
    i64 balance = 0;
    for (u64 a = 1; a <= (p - 1) / 2; ++a) {
        balance += powmod_naive(a, (p - 1) / 2, p) == 1 ? 1 : -1;
    }
    const bool two_is_qr = powmod_naive(2, (p - 1) / 2, p) == 1;
    return static_cast<u64>(balance / (two_is_qr ? 1 : 3));
}

}  // namespace oracle
