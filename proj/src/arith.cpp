#include "residua/arith.hpp"

#include <algorithm>
#include <cmath>

#include "residua/montgomery.hpp"

namespace residua {

u64 mulmod_u64(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

u64 powmod_u64(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod_u64(result, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return result;
}

namespace {

bool miller_rabin_u64(u64 n, const Mont64& mont, u64 base) {
    base %= n;
    if (base == 0) return true;
    u64 d = n - 1;
    int r = __builtin_ctzll(d);
    d >>= r;
    u64 x = mont.pow(mont.to_mont(base), d);
    const u64 one = mont.one();
    const u64 minus_one = n - one;
    if (x == one || x == minus_one) return true;
    for (int i = 1; i < r; ++i) {
        x = mont.mul(x, x);
        if (x == minus_one) return true;
    }
    return false;
}

}  // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    if (n < 41 * 41) return true;
    Mont64 mont(n);
    // witness set covering the full 64-bit range
    for (u64 base : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
        if (!miller_rabin_u64(n, mont, base)) return false;
    }
    return true;
}

u64 mod_pow(i64 base, u64 exponent, const PrimeModulus& modulus) {
    const u64 p = modulus.value();
    i64 b = base % static_cast<i64>(p);
    u64 ub = b < 0 ? static_cast<u64>(b + static_cast<i64>(p)) : static_cast<u64>(b);
    return powmod_u64(ub, exponent, p);
}

namespace {

// extended euclid on u128; returns x with a*x ≡ gcd (mod m), gcd as out
u128 ext_inverse_u128(u128 a, u128 m, u128* gcd_out) {
    i128 old_r = static_cast<i128>(a % m), r = static_cast<i128>(m);
    i128 old_s = 1, s = 0;
    while (r != 0) {
        i128 q = old_r / r;
        i128 t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (gcd_out) *gcd_out = static_cast<u128>(old_r);
    i128 x = old_s % static_cast<i128>(m);
    if (x < 0) x += static_cast<i128>(m);
    return static_cast<u128>(x);
}

}  // namespace

u64 mod_inverse_u64(u64 a, u64 m) {
    u128 g = 0;
    u128 inv = ext_inverse_u128(a, m, &g);
    if (g != 1) throw domain_error(std::to_string(a) + " is not invertible mod " + std::to_string(m));
    return static_cast<u64>(inv);
}

u128 mod_inverse_u128(u128 a, u128 m) {
    u128 g = 0;
    u128 inv = ext_inverse_u128(a, m, &g);
    if (g != 1) throw domain_error(to_string_u128(a) + " is not invertible mod " + to_string_u128(m));
    return inv;
}

u64 mod_inverse(i64 a, const PrimeModulus& modulus) {
    const u64 p = modulus.value();
    i64 r = a % static_cast<i64>(p);
    u64 ur = r < 0 ? static_cast<u64>(r + static_cast<i64>(p)) : static_cast<u64>(r);
    if (ur == 0) throw domain_error("not invertible: argument divisible by modulus");
    return mod_inverse_u64(ur, p);
}

std::optional<u64> mod_sqrt(u64 a, const PrimeModulus& modulus) {
    const u64 p = modulus.value();
    if (p == 2) return a % 2;
    a %= p;
    if (a == 0) return 0;
    if (powmod_u64(a, (p - 1) / 2, p) != 1) return std::nullopt;

    u64 root;
    if (p % 4 == 3) {
        root = powmod_u64(a, (p + 1) / 4, p);
    } else {
        // Tonelli-Shanks
        u64 q = p - 1;
        int s = __builtin_ctzll(q);
        q >>= s;
        u64 z = 2;
        while (powmod_u64(z, (p - 1) / 2, p) != p - 1) ++z;
        u64 m = static_cast<u64>(s);
        u64 c = powmod_u64(z, q, p);
        u64 t = powmod_u64(a, q, p);
        root = powmod_u64(a, (q + 1) / 2, p);
        while (t != 1) {
            u64 i = 0;
            u64 t2 = t;
            while (t2 != 1) {
                t2 = mulmod_u64(t2, t2, p);
                ++i;
            }
            u64 b = c;
            for (u64 j = 0; j + i + 1 < m; ++j) b = mulmod_u64(b, b, p);
            m = i;
            c = mulmod_u64(b, b, p);
            t = mulmod_u64(t, c, p);
            root = mulmod_u64(root, b, p);
        }
    }
    u64 other = p - root;
    return std::min(root, other);
}

int jacobi(i128 a, u128 n) {
    // n odd, n > 0; (a|n) = (a mod n | n)
    u128 ua;
    if (a < 0) {
        ua = static_cast<u128>(-a) % n;
        if (ua != 0) ua = n - ua;
    } else {
        ua = static_cast<u128>(a) % n;
    }
    int result = 1;
    while (ua != 0) {
        u64 lo = static_cast<u64>(ua);
        int tz = lo != 0 ? __builtin_ctzll(lo) : 64 + __builtin_ctzll(static_cast<u64>(ua >> 64));
        ua >>= tz;
        if (tz & 1) {
            u64 nm8 = static_cast<u64>(n) & 7;
            if (nm8 == 3 || nm8 == 5) result = -result;
        }
        if ((static_cast<u64>(ua) & 3) == 3 && (static_cast<u64>(n) & 3) == 3) result = -result;
        u128 t = n % ua;
        n = ua;
        ua = t;
    }
    if (n != 1) return 0;
    return result;
}

std::vector<u64> primes_up_to(u64 limit) {
    if (limit > 1000000000ull) throw domain_error("primes_up_to supports limits up to 10^9");
    std::vector<u64> primes;
    if (limit < 2) return primes;

    const u64 sqrt_limit = isqrt_u64(limit);
    std::vector<char> small(sqrt_limit + 1, 1);
    for (u64 i = 2; i * i <= sqrt_limit; ++i) {
        if (small[i]) {
            for (u64 j = i * i; j <= sqrt_limit; j += i) small[j] = 0;
        }
    }
    std::vector<u64> base;
    for (u64 i = 2; i <= sqrt_limit; ++i) {
        if (small[i]) base.push_back(i);
    }

    constexpr u64 kSegment = 1 << 18;
    std::vector<char> sieve(kSegment);
    for (u64 low = 2; low <= limit; low += kSegment) {
        const u64 high = std::min(low + kSegment - 1, limit);
        std::fill(sieve.begin(), sieve.end(), 1);
        for (u64 p : base) {
            if (p * p > high) break;
            u64 start = std::max(p * p, ((low + p - 1) / p) * p);
            for (u64 j = start; j <= high; j += p) sieve[j - low] = 0;
        }
        for (u64 v = low; v <= high; ++v) {
            if (sieve[v - low]) primes.push_back(v);
        }
    }
    return primes;
}

u64 next_prime(u64 n) {
    u64 c = n + 1;
    if (c <= 2) return 2;
    if (c % 2 == 0) ++c;
    while (!is_prime(c)) c += 2;
    return c;
}

}  // namespace residua
