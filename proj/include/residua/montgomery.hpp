#pragma once

#include "residua/int128.hpp"

namespace residua {

/// Montgomery multiplication context for odd moduli below 2^64.
struct Mont64 {
    u64 n;
    u64 ninv;  // -n^{-1} mod 2^64
    u64 r1;    // 2^64 mod n
    u64 r2;    // 2^128 mod n

    explicit Mont64(u64 modulus) : n(modulus) {
        u64 x = n;
        for (int i = 0; i < 6; ++i) x *= 2 - n * x;
        ninv = ~x + 1;
        r1 = (~static_cast<u64>(0) % n) + 1;
        if (r1 == n) r1 = 0;
        r2 = static_cast<u64>((static_cast<u128>(r1) * r1) % n);
    }

    u64 redc(u128 t) const {
        const u64 m = static_cast<u64>(t) * ninv;
        const u128 mn = static_cast<u128>(m) * n;
        // low halves cancel exactly; their sum is 0 or 2^64
        const u64 carry = static_cast<u64>(t) != 0 ? 1 : 0;
        u128 r = (t >> 64) + (mn >> 64) + carry;
        if (r >= n) r -= n;
        return static_cast<u64>(r);
    }

    u64 mul(u64 a, u64 b) const { return redc(static_cast<u128>(a) * b); }
    u64 to_mont(u64 a) const { return mul(a % n, r2); }
    u64 from_mont(u64 a) const { return redc(a); }
    u64 one() const { return r1; }

    u64 pow(u64 a_mont, u64 e) const {
        u64 acc = one(), base = a_mont;
        while (e > 0) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }

    u64 add(u64 a, u64 b) const {
        u64 s = a + b;
        if (s >= n || s < a) s -= n;
        return s;
    }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + (n - b); }
};

/// Shift-and-add modular multiplication; no precomputation, O(128) steps.
/// Requires n < 2^127.
inline u128 mulmod_u128_slow(u128 a, u128 b, u128 n) {
    a %= n;
    b %= n;
    if (a == 0 || b == 0) return 0;
    if (a < b) {
        u128 t = a;
        a = b;
        b = t;
    }
    u128 res = 0;
    while (b > 0) {
        if (b & 1) {
            res += a;
            if (res >= n) res -= n;
        }
        a <<= 1;
        if (a >= n) a -= n;
        b >>= 1;
    }
    return res;
}

/// Montgomery context for odd moduli in (2^1, 2^127).
struct Mont128 {
    u128 n;
    u64 ninv;  // -n^{-1} mod 2^64
    u128 r1;   // 2^128 mod n
    u128 r2;   // 2^256 mod n

    explicit Mont128(u128 modulus) : n(modulus) {
        u64 n0 = static_cast<u64>(n);
        u64 x = n0;
        for (int i = 0; i < 6; ++i) x *= 2 - n0 * x;
        ninv = ~x + 1;
        r1 = (-n) % n;
        r2 = mulmod_u128_slow(r1, r1, n);
    }

    u128 mul(u128 a, u128 b) const {
        const u64 a0 = static_cast<u64>(a), a1 = static_cast<u64>(a >> 64);
        const u64 b0 = static_cast<u64>(b), b1 = static_cast<u64>(b >> 64);
        const u64 n0 = static_cast<u64>(n), n1 = static_cast<u64>(n >> 64);

        // 256-bit product of a and b in four 64-bit limbs
        const u128 p00 = static_cast<u128>(a0) * b0;
        const u128 p01 = static_cast<u128>(a0) * b1;
        const u128 p10 = static_cast<u128>(a1) * b0;
        const u128 p11 = static_cast<u128>(a1) * b1;

        u64 t[4];
        t[0] = static_cast<u64>(p00);
        u128 acc = (p00 >> 64) + static_cast<u64>(p01) + static_cast<u64>(p10);
        t[1] = static_cast<u64>(acc);
        acc = (acc >> 64) + (p01 >> 64) + (p10 >> 64) + static_cast<u64>(p11);
        t[2] = static_cast<u64>(acc);
        t[3] = static_cast<u64>((acc >> 64) + (p11 >> 64));

        // two REDC rounds, one per 64-bit limb
        u64 extra = 0;
        for (int i = 0; i < 2; ++i) {
            const u64 m = t[i] * ninv;
            u128 s = static_cast<u128>(m) * n0 + t[i];
            u128 carry = s >> 64;
            s = static_cast<u128>(m) * n1 + t[i + 1] + carry;
            t[i + 1] = static_cast<u64>(s);
            carry = s >> 64;
            for (int j = i + 2; j < 4; ++j) {
                s = static_cast<u128>(t[j]) + carry;
                t[j] = static_cast<u64>(s);
                carry = s >> 64;
            }
            extra += static_cast<u64>(carry);
        }
        u128 res = (static_cast<u128>(t[3]) << 64) | t[2];
        if (extra != 0 || res >= n) res -= n;
        return res;
    }

    u128 to_mont(u128 a) const { return mul(a % n, r2); }
    u128 from_mont(u128 a) const { return mul(a, 1); }
    u128 one() const { return r1; }

    u128 pow(u128 a_mont, u128 e) const {
        u128 acc = one(), base = a_mont;
        while (e > 0) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }

    u128 add(u128 a, u128 b) const {
        u128 s = a + b;
        if (s >= n) s -= n;
        return s;
    }
    u128 sub(u128 a, u128 b) const { return a >= b ? a - b : a + (n - b); }
};

}  // namespace residua
