#include "residua/represent.hpp"

#include <algorithm>
#include <numeric>

#include "residua/errors.hpp"

namespace residua {

namespace {

constexpr u64 kBruteForceLimit = 10000000;  // brute iteration below, Cornacchia above

void check_cubic_class(u64 p) {
    if (p % 3 != 1) throw domain_error("p = " + std::to_string(p) + " is not 1 (mod 3)");
}

void check_quartic_class(u64 p) {
    if (p % 4 != 1) throw domain_error("p = " + std::to_string(p) + " is not 1 (mod 4)");
}

Representation validated(u64 p, RepKind kind, u64 big_l, u64 big_m) {
    if (big_l == 0 || big_m == 0) throw integrity_error("representation with zero component");
    const u128 lhs = kind == RepKind::Cubic4p27 ? static_cast<u128>(4) * p : static_cast<u128>(p);
    const u64 m_coeff = kind == RepKind::Cubic4p27 ? 27 : 4;
    const u128 rhs =
        static_cast<u128>(big_l) * big_l + static_cast<u128>(m_coeff) * big_m * big_m;
    if (lhs != rhs) throw integrity_error("representation equation violated");
    const u64 g = std::gcd(big_l, big_m);
    if (kind == RepKind::Cubic4p27 ? (g != 1 && g != 2) : (g != 1))
        throw integrity_error("representation gcd invariant violated");
    return Representation{p, kind, big_l, big_m};
}

// iterate m upward testing whether the complement is a perfect square
Representation brute_force_rep(u64 p, RepKind kind) {
    const u128 target = kind == RepKind::Cubic4p27 ? static_cast<u128>(4) * p : p;
    const u64 m_coeff = kind == RepKind::Cubic4p27 ? 27 : 4;
    for (u64 m = 1;; ++m) {
        const u128 sq = static_cast<u128>(m_coeff) * m * m;
        if (sq >= target) break;
        u128 root = 0;
        if (is_perfect_square(target - sq, &root)) {
            return validated(p, kind, static_cast<u64>(root), m);
        }
    }
    throw integrity_error("no representation found for certified prime " + std::to_string(p));
}

// Cornacchia: smallest remainder below sqrt(p) in the Euclidean descent
// of (p, t) where t^2 ≡ -d (mod p); then p = r^2 + d s^2.
bool cornacchia(u64 p, u64 d, u64* x_out, u64* y_out) {
    const PrimeModulus pm(p);
    u64 neg_d = (p - d % p) % p;
    auto t_opt = mod_sqrt(neg_d, pm);
    if (!t_opt) return false;
    u64 t = *t_opt;
    if (t < p - t) t = p - t;  // representative in (p/2, p)

    const u64 sqrt_p = isqrt_u64(p);
    u64 a = p, b = t;
    while (b > sqrt_p) {
        u64 r = a % b;
        a = b;
        b = r;
    }
    const u128 rest = static_cast<u128>(p) - static_cast<u128>(b) * b;
    if (rest % d != 0) return false;
    u128 s = 0;
    if (!is_perfect_square(rest / d, &s)) return false;
    *x_out = b;
    *y_out = static_cast<u64>(s);
    return true;
}

}  // namespace

Representation represent_cubic(const PrimeModulus& p) {
    const u64 pv = p.value();
    check_cubic_class(pv);
    if (pv <= kBruteForceLimit) return brute_force_rep(pv, RepKind::Cubic4p27);

    // p = a^2 + 3b^2 via Cornacchia, then 4p = L^2 + 27M^2
    u64 a = 0, b = 0;
    if (!cornacchia(pv, 3, &a, &b))
        throw integrity_error("Cornacchia failed for certified prime " + std::to_string(pv));
    u64 big_l, big_m;
    if (b % 3 == 0) {
        big_l = 2 * a;
        big_m = 2 * (b / 3);
    } else if ((a + b) % 3 == 0) {
        big_l = a > 3 * b ? a - 3 * b : 3 * b - a;
        big_m = (a + b) / 3;
    } else {
        big_l = a + 3 * b;
        big_m = (a > b ? a - b : b - a) / 3;
    }
    return validated(pv, RepKind::Cubic4p27, big_l, big_m);
}

Representation represent_quartic(const PrimeModulus& p) {
    const u64 pv = p.value();
    check_quartic_class(pv);
    if (pv <= kBruteForceLimit) return brute_force_rep(pv, RepKind::Quartic4);

    // p = x^2 + y^2 via Cornacchia with d = 1; the even member is 2M
    u64 x = 0, y = 0;
    if (!cornacchia(pv, 1, &x, &y))
        throw integrity_error("Cornacchia failed for certified prime " + std::to_string(pv));
    const u64 odd = x % 2 == 1 ? x : y;
    const u64 even = x % 2 == 1 ? y : x;
    return validated(pv, RepKind::Quartic4, odd, even / 2);
}

Representation make_representation(const PrimeModulus& p, RepKind kind, u64 big_l, u64 big_m) {
    if (kind == RepKind::Cubic4p27) check_cubic_class(p.value());
    else check_quartic_class(p.value());
    const u128 lhs =
        kind == RepKind::Cubic4p27 ? static_cast<u128>(4) * p.value() : static_cast<u128>(p.value());
    const u64 m_coeff = kind == RepKind::Cubic4p27 ? 27 : 4;
    if (big_l == 0 || big_m == 0 ||
        lhs != static_cast<u128>(big_l) * big_l + static_cast<u128>(m_coeff) * big_m * big_m)
        throw domain_error("(L, M) does not satisfy the defining equation for p");
    return Representation{p.value(), kind, big_l, big_m};
}

std::vector<QuadraticForm> reduced_forms(const PrimeModulus& p) {
    const u64 pv = p.value();
    if (pv % 4 != 3) throw domain_error("p = " + std::to_string(pv) + " is not 3 (mod 4)");

    std::vector<QuadraticForm> forms;
    const i64 disc = -static_cast<i64>(pv);
    const u64 a_max = isqrt_u64(pv / 3);
    for (u64 a = 1; a <= a_max; ++a) {
        for (i64 b = -static_cast<i64>(a); b <= static_cast<i64>(a); ++b) {
            const i64 num = b * b + static_cast<i64>(pv);  // = b^2 - disc
            if (num % static_cast<i64>(4 * a) != 0) continue;
            const i64 c = num / static_cast<i64>(4 * a);
            if (c < static_cast<i64>(a)) continue;
            // reduced: b >= 0 whenever |b| = a or a = c
            if (b < 0 && (-b == static_cast<i64>(a) || c == static_cast<i64>(a))) continue;
            const u64 g = std::gcd(std::gcd(a, static_cast<u64>(b < 0 ? -b : b)), static_cast<u64>(c));
            if (g != 1) throw integrity_error("imprimitive form for prime discriminant");
            forms.push_back(QuadraticForm{a, b, static_cast<u64>(c), disc});
        }
    }
    // enumeration produces ascending (a, b); c is determined
    return forms;
}

namespace {

// square roots of v mod l^e for an odd prime l not dividing v
// (Tonelli seed, Hensel lifts); empty when v is a non-residue
std::vector<u64> sqrt_mod_odd_prime_power(u64 v, u64 l, u32 e) {
    const PrimeModulus lm(l);
    auto seed = mod_sqrt(v % l, lm);
    if (!seed) return {};
    u64 mod_cur = l;
    u64 root = *seed;
    for (u32 j = 1; j < e; ++j) {
        const u64 mod_next = mod_cur * l;
        // root' = root - (root^2 - v) / (2 root) mod l^(j+1)
        const u64 fx = (static_cast<u64>((static_cast<u128>(root) * root) % mod_next) + mod_next -
                        v % mod_next) %
                       mod_next;
        const u64 two_r = mulmod_u64(2, root, mod_next);
        const u64 inv = static_cast<u64>(mod_inverse_u128(two_r, mod_next));
        root = (root + mod_next - mulmod_u64(fx, inv, mod_next)) % mod_next;
        mod_cur = mod_next;
    }
    if (root == 0) return {0};
    return {root, mod_cur - root};
}

// odd square roots of odd v mod 2^k; for k >= 3 there are exactly four,
// {±r, ±r + 2^(k-1)}, when v = 1 (mod 8)
std::vector<u64> sqrt_mod_pow2(u64 v, u32 k) {
    if (k == 1) return {1};
    if (k == 2) return v % 4 == 1 ? std::vector<u64>{1, 3} : std::vector<u64>{};
    if (v % 8 != 1) return {};
    u64 r = 1;
    for (u32 j = 3; j < k; ++j) {
        // adding 2^(j-1) flips bit j of the square
        const u64 mod_next = static_cast<u64>(1) << (j + 1);
        if ((static_cast<u128>(r) * r) % mod_next != v % mod_next)
            r += static_cast<u64>(1) << (j - 1);
    }
    const u64 mod_full = static_cast<u64>(1) << k;
    const u64 half = mod_full >> 1;
    return {r, mod_full - r, (r + half) % mod_full, (mod_full - r + half) % mod_full};
}

// all b in [0, 4a) with b^2 = -p (mod 4a), via CRT over the prime-power
// components of 4a
std::vector<u64> roots_neg_p_mod_4a(u64 p, u64 a) {
    const u64 modulus = 4 * a;
    const u64 v = (modulus - p % modulus) % modulus;

    std::vector<std::pair<u64, std::vector<u64>>> components;
    u64 rest = a;
    u32 two_exp = 2;
    while (rest % 2 == 0) {
        rest /= 2;
        ++two_exp;
    }
    components.emplace_back(static_cast<u64>(1) << two_exp, sqrt_mod_pow2(v, two_exp));
    if (components.back().second.empty()) return {};

    for (u64 d = 3; d * d <= rest; d += 2) {
        if (rest % d != 0) continue;
        u32 e = 0;
        u64 pe = 1;
        while (rest % d == 0) {
            rest /= d;
            ++e;
            pe *= d;
        }
        components.emplace_back(pe, sqrt_mod_odd_prime_power(v % pe, d, e));
        if (components.back().second.empty()) return {};
    }
    if (rest > 1) {
        components.emplace_back(rest, sqrt_mod_odd_prime_power(v % rest, rest, 1));
        if (components.back().second.empty()) return {};
    }

    std::vector<u64> out{0};
    u64 mod_cur = 1;
    for (const auto& [pe, roots] : components) {
        std::vector<u64> next;
        next.reserve(out.size() * roots.size());
        const u64 inv = static_cast<u64>(mod_inverse_u128(mod_cur % pe, pe));
        for (u64 base : out) {
            for (u64 r : roots) {
                // x = base (mod mod_cur), x = r (mod pe)
                const u64 delta = (r + pe - base % pe) % pe;
                next.push_back(base + mod_cur * mulmod_u64(delta, inv, pe));
            }
        }
        out = std::move(next);
        mod_cur *= pe;
    }
    return out;
}

}  // namespace

QuadraticForm max_a_form(const PrimeModulus& p) {
    const u64 pv = p.value();
    if (pv % 4 != 3) throw domain_error("p = " + std::to_string(pv) + " is not 3 (mod 4)");

    // scan a downward; the principal form (1, 1, (1+p)/4) guarantees a hit
    for (u64 a = isqrt_u64(pv / 3); a >= 1; --a) {
        bool found = false;
        QuadraticForm best;
        for (u64 b0 : roots_neg_p_mod_4a(pv, a)) {
            i64 b;
            if (b0 <= a) b = static_cast<i64>(b0);
            else if (b0 >= 3 * a) b = static_cast<i64>(b0) - static_cast<i64>(4 * a);
            else continue;
            const u64 c = static_cast<u64>((static_cast<u128>(b) * b + pv) / (4 * a));
            if (c < a) continue;
            if (b < 0 && (static_cast<u64>(-b) == a || c == a)) continue;
            const QuadraticForm form{a, b, c, -static_cast<i64>(pv)};
            if (!found || form.b > best.b || (form.b == best.b && form.c > best.c)) best = form;
            found = true;
        }
        if (found) return best;
    }
    throw integrity_error("no reduced form found for discriminant -" + std::to_string(pv));
}

}  // namespace residua
