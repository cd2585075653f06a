#include <algorithm>
#include <map>
#include <numeric>

#include "residua/arith.hpp"
#include "residua/montgomery.hpp"

namespace residua {

namespace {

const std::vector<u64>& small_primes() {
    static const std::vector<u64> primes = primes_up_to(1024);
    return primes;
}

const std::vector<u64>& fallback_primes() {
    // deterministic last-resort trial division table
    static const std::vector<u64> primes = primes_up_to(1 << 20);
    return primes;
}

u64 gcd_u64(u64 a, u64 b) {
    while (b != 0) {
        u64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Brent's cycle variant of Pollard rho with one polynomial x^2 + c.
// Returns a nontrivial factor of n (odd composite), or 0 when max_iters
// ran out or the gcd collapsed to n.
u64 rho64(u64 n, u64 c_param, u64 max_iters) {
    Mont64 m(n);
    const u64 c_mont = m.to_mont(c_param);
    auto step = [&](u64 v) { return m.add(m.mul(v, v), c_mont); };
    u64 y = m.to_mont(2), q = m.one(), g = 1, x = 0, ys = 0;
    u64 spent = 0;
    for (u64 r = 1; g == 1; r <<= 1) {
        x = y;
        for (u64 i = 0; i < r; ++i) y = step(y);
        for (u64 k = 0; k < r && g == 1; k += 128) {
            ys = y;
            const u64 lim = std::min<u64>(128, r - k);
            for (u64 i = 0; i < lim; ++i) {
                y = step(y);
                q = m.mul(q, m.sub(x, y));
            }
            g = gcd_u64(q, n);
            spent += lim;
        }
        if (spent > max_iters && g == 1) return 0;
    }
    if (g == n) {
        // batched past the factor; replay one step at a time
        g = 1;
        while (g == 1) {
            ys = step(ys);
            g = gcd_u64(m.sub(x, ys), n);
        }
    }
    return g == n ? 0 : g;
}

u128 gcd_mont128(const Mont128& m, u128 a) { return gcd_u128(a, m.n); }

u128 rho128(const Mont128& m, u64 c_param, u64 max_iters) {
    const u128 n = m.n;
    const u128 c_mont = m.to_mont(c_param);
    auto step = [&](u128 v) { return m.add(m.mul(v, v), c_mont); };
    u128 y = m.to_mont(2), q = m.one();
    u128 g = 1, x = 0, ys = 0;
    u64 spent = 0;
    for (u64 r = 1; g == 1; r <<= 1) {
        x = y;
        for (u64 i = 0; i < r; ++i) y = step(y);
        for (u64 k = 0; k < r && g == 1; k += 128) {
            ys = y;
            const u64 lim = std::min<u64>(128, r - k);
            for (u64 i = 0; i < lim; ++i) {
                y = step(y);
                q = m.mul(q, m.sub(x, y));
            }
            g = gcd_mont128(m, q);
            spent += lim;
        }
        if (spent > max_iters && g == 1) return 0;
    }
    if (g == n) {
        g = 1;
        while (g == 1) {
            ys = step(ys);
            g = gcd_mont128(m, m.sub(x, ys));
        }
    }
    return g == n ? 0 : g;
}

// --- ECM stage 1 on Montgomery curves (x:z coordinates) ---

struct EcmPoint {
    u128 x, z;
};

EcmPoint ecm_double(const Mont128& m, const EcmPoint& p, u128 a24) {
    u128 s = m.add(p.x, p.z);
    u128 d = m.sub(p.x, p.z);
    s = m.mul(s, s);
    d = m.mul(d, d);
    u128 t = m.sub(s, d);
    return {m.mul(s, d), m.mul(t, m.add(d, m.mul(a24, t)))};
}

// differential add: p + q where p - q = diff
EcmPoint ecm_add(const Mont128& m, const EcmPoint& p, const EcmPoint& q, const EcmPoint& diff) {
    u128 e = m.mul(m.sub(p.x, p.z), m.add(q.x, q.z));
    u128 f = m.mul(m.add(p.x, p.z), m.sub(q.x, q.z));
    u128 u = m.add(e, f);
    u128 v = m.sub(e, f);
    return {m.mul(diff.z, m.mul(u, u)), m.mul(diff.x, m.mul(v, v))};
}

EcmPoint ecm_ladder(const Mont128& m, const EcmPoint& p, u64 k, u128 a24) {
    if (k == 1) return p;
    EcmPoint r0 = p;
    EcmPoint r1 = ecm_double(m, p, a24);
    const int bits = 64 - __builtin_clzll(k);
    for (int i = bits - 2; i >= 0; --i) {
        if ((k >> i) & 1) {
            r0 = ecm_add(m, r0, r1, p);
            r1 = ecm_double(m, r1, a24);
        } else {
            r1 = ecm_add(m, r0, r1, p);
            r0 = ecm_double(m, r0, a24);
        }
    }
    return r0;
}

// One ECM curve (Suyama parametrization), stage 1 only. Returns a
// nontrivial factor or 0.
u128 ecm_curve(const Mont128& m, u64 sigma, u64 b1, const std::vector<u64>& primes) {
    const u128 n = m.n;
    const u128 sig = m.to_mont(sigma);
    u128 u = m.sub(m.mul(sig, sig), m.to_mont(5));
    u128 v = m.add(sig, sig);
    v = m.add(v, v);
    u128 x0 = m.mul(m.mul(u, u), u);
    u128 z0 = m.mul(m.mul(v, v), v);

    // a24 = (v-u)^3 (3u+v) / (16 u^3 v)
    u128 diff = m.sub(v, u);
    u128 num = m.mul(m.mul(diff, diff), diff);
    num = m.mul(num, m.add(m.add(m.add(u, u), u), v));
    u128 den = m.mul(m.mul(m.to_mont(16), x0), v);
    u128 den_plain = m.from_mont(den);
    u128 g = gcd_u128(den_plain, n);
    if (g != 1) return g == n ? 0 : g;
    u128 a24 = m.mul(num, m.to_mont(mod_inverse_u128(den_plain, n)));

    EcmPoint point{x0, z0};
    u64 since_check = 0;
    for (u64 p : primes) {
        if (p > b1) break;
        u64 pe = p;
        while (pe <= b1 / p) pe *= p;
        point = ecm_ladder(m, point, pe, a24);
        if (++since_check >= 64) {
            since_check = 0;
            g = gcd_u128(m.from_mont(point.z), n);
            if (g == n) return 0;
            if (g != 1) return g;
        }
    }
    g = gcd_u128(m.from_mont(point.z), n);
    if (g != 1 && g != n) return g;
    return 0;
}

u128 ecm_tier(const Mont128& m, u64 b1, u64 curves, u64* sigma) {
    static const std::vector<u64> b1_primes = primes_up_to(120000);
    for (u64 i = 0; i < curves; ++i) {
        u128 f = ecm_curve(m, (*sigma)++, b1, b1_primes);
        if (f != 0) return f;
    }
    return 0;
}

// Splits an odd composite with no prime factor <= rough_bound.
u128 split_composite(u128 n, u64 rough_bound) {
    if (n <= ~static_cast<u64>(0)) {
        u64 n64 = static_cast<u64>(n);
        for (u64 c = 1, budget = 1 << 20;; ++c, budget <<= 1) {
            u64 f = rho64(n64, c, budget);
            if (f != 0 && f != n64) return f;
        }
    }

    Mont128 m(n);
    // a bounded rho pass picks off factors below ~2^34 cheaply; larger
    // ones are usually faster through the ECM tiers
    u128 f = rho128(m, 1, static_cast<u64>(1) << 17);
    if (f != 0) return f;
    u64 sigma = 6;
    struct Tier {
        u64 b1, curves;
    };
    for (Tier tier : {Tier{2000, 16}, Tier{12000, 40}, Tier{60000, 80}}) {
        f = ecm_tier(m, tier.b1, tier.curves, &sigma);
        if (f != 0) return f;
    }
    // deterministic fallback: extended trial division, then unbounded rho
    if (rough_bound < (1 << 20)) {
        for (u64 p : fallback_primes()) {
            if (p <= rough_bound) continue;
            if (n % p == 0) return p;
        }
    }
    for (u64 c = 2;; ++c) {
        f = rho128(m, c, static_cast<u64>(1) << 32);
        if (f != 0) return f;
    }
}

void factor_rough_into(u128 n, u64 rough_bound, std::map<u128, u32>& out) {
    std::vector<u128> pending{n};
    const u128 bound_sq = static_cast<u128>(rough_bound) * rough_bound;
    while (!pending.empty()) {
        u128 c = pending.back();
        pending.pop_back();
        if (c == 1) continue;
        if (c <= bound_sq || is_prime_u128(c)) {
            ++out[c];
            continue;
        }
        u128 f = split_composite(c, rough_bound);
        pending.push_back(f);
        pending.push_back(c / f);
    }
}

}  // namespace

Factorization factorize(u128 n) {
    if (n == 0) throw domain_error("factorize requires n >= 1");
    Factorization result;
    result.base = n;
    if (n == 1) return result;

    std::map<u128, u32> counts;
    u128 c = n;
    for (u64 p : small_primes()) {
        if (static_cast<u128>(p) * p > c) break;
        while (c % p == 0) {
            c /= p;
            ++counts[p];
        }
    }
    if (c > 1) {
        if (is_prime_u128(c)) {
            ++counts[c];
        } else {
            factor_rough_into(c, 1024, counts);
        }
    }

    u128 check = 1;
    for (const auto& [p, e] : counts) {
        result.factors.emplace_back(p, e);
        for (u32 i = 0; i < e; ++i) check *= p;
        if (!is_prime_u128(p))
            throw integrity_error("factorize produced a composite factor " + to_string_u128(p));
    }
    if (check != n) throw integrity_error("factorize product mismatch for " + to_string_u128(n));
    return result;
}

/// Factorize an integer already known to have no prime factor <= rough_bound.
Factorization factorize_rough(u128 n, u64 rough_bound) {
    if (n == 0) throw domain_error("factorize requires n >= 1");
    Factorization result;
    result.base = n;
    if (n == 1) return result;
    std::map<u128, u32> counts;
    factor_rough_into(n, rough_bound, counts);
    u128 check = 1;
    for (const auto& [p, e] : counts) {
        result.factors.emplace_back(p, e);
        for (u32 i = 0; i < e; ++i) check *= p;
    }
    if (check != n) throw integrity_error("factorize product mismatch for " + to_string_u128(n));
    return result;
}

}  // namespace residua
