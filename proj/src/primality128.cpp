#include "residua/arith.hpp"
#include "residua/montgomery.hpp"

namespace residua {

namespace {

bool miller_rabin_base2_u128(u128 n, const Mont128& mont) {
    u128 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    u128 x = mont.pow(mont.to_mont(2), d);
    const u128 one = mont.one();
    const u128 minus_one = mont.sub(0, one);
    if (x == one || x == minus_one) return true;
    for (int i = 1; i < s; ++i) {
        x = mont.mul(x, x);
        if (x == minus_one) return true;
    }
    return false;
}

u128 mont_halve(u128 x, u128 n) {
    return (x & 1) ? ((x + n) >> 1) : (x >> 1);
}

// Strong Lucas probable-prime test, Selfridge parameter choice.
// Caller must have excluded perfect squares (the D scan would not halt).
bool strong_lucas_u128(u128 n, const Mont128& mont) {
    i128 d_param = 5;
    while (true) {
        int j = jacobi(d_param, n);
        if (j == 0) return false;  // proper factor shared with d_param
        if (j == -1) break;
        d_param = d_param > 0 ? -(d_param + 2) : -(d_param - 2);
    }
    const i128 q_param = (1 - d_param) / 4;  // P = 1

    auto to_residue = [&](i128 v) -> u128 {
        i128 r = v % static_cast<i128>(n);
        if (r < 0) r += static_cast<i128>(n);
        return static_cast<u128>(r);
    };
    const u128 d_mont = mont.to_mont(to_residue(d_param));
    const u128 q_mont = mont.to_mont(to_residue(q_param));

    u128 nd = n + 1;
    int s = 0;
    while ((nd & 1) == 0) {
        nd >>= 1;
        ++s;
    }

    // ladder over the bits of nd computes U_nd, V_nd, Q^nd
    u128 u_cur = mont.one();  // U_1
    u128 v_cur = mont.one();  // V_1 = P
    u128 qk = q_mont;         // Q^1
    int top = bit_length(nd) - 2;
    for (int i = top; i >= 0; --i) {
        u128 u2 = mont.mul(u_cur, v_cur);
        u128 v2 = mont.sub(mont.mul(v_cur, v_cur), mont.add(qk, qk));
        qk = mont.mul(qk, qk);
        if ((nd >> i) & 1) {
            u128 u_next = mont_halve(mont.add(u2, v2), n);
            u128 v_next = mont_halve(mont.add(mont.mul(d_mont, u2), v2), n);
            u_cur = u_next;
            v_cur = v_next;
            qk = mont.mul(qk, q_mont);
        } else {
            u_cur = u2;
            v_cur = v2;
        }
    }

    if (u_cur == 0) return true;
    // V_{d·2^r} ≡ 0 for some r in [0, s)
    for (int r = 0; r < s; ++r) {
        if (v_cur == 0) return true;
        v_cur = mont.sub(mont.mul(v_cur, v_cur), mont.add(qk, qk));
        qk = mont.mul(qk, qk);
    }
    return false;
}

}  // namespace

bool is_prime_u128(u128 n) {
    if (n <= ~static_cast<u64>(0)) return is_prime(static_cast<u64>(n));
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return false;
    }
    Mont128 mont(n);
    if (!miller_rabin_base2_u128(n, mont)) return false;
    // the square check only guards the Lucas D-scan, so it runs after
    // the base-2 test has discarded the bulk of composites
    if (is_perfect_square(n)) return false;
    return strong_lucas_u128(n, mont);
}

}  // namespace residua
