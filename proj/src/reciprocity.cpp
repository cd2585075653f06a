#include "residua/reciprocity.hpp"

#include "residua/errors.hpp"
#include "residua/montgomery.hpp"

namespace residua {

namespace {

void check_congruence_class(const PrimeModulus& p, int k) {
    if (k != 2 && k != 3 && k != 4) throw domain_error("k must be 2, 3, or 4");
    if ((p.value() - 1) % static_cast<u64>(k) != 0)
        throw domain_error("p = " + std::to_string(p.value()) + " is not 1 (mod " +
                           std::to_string(k) + ")");
}

// shared accept rule at one x given rhs numerator/denominator mod q
bool accept_at(u64 lhs_num, u64 lhs_den, u64 rhs_num, u64 rhs_den, u64 q, bool* shared) {
    if (rhs_den == 0) {
        *shared = true;
        return lhs_den == 0;
    }
    *shared = false;
    if (lhs_den == 0) return false;
    return mulmod_u64(lhs_num, rhs_den, q) == mulmod_u64(rhs_num, lhs_den, q);
}

CriterionResult search_criterion(u64 q, const Representation& rep, bool quartic) {
    auto addm = [q](u64 a, u64 b) {
        u64 s = a + b;
        if (s >= q || s < a) s -= q;
        return s;
    };
    auto subm = [q](u64 a, u64 b) { return a >= b ? a - b : a + (q - b); };
    const u64 lhs_num = rep.L % q;
    const u64 lhs_den = quartic ? mulmod_u64(2 % q, rep.M % q, q) : mulmod_u64(3 % q, rep.M % q, q);
    CriterionResult result;
    for (u64 x = 0; x < q; ++x) {
        const u64 x2 = mulmod_u64(x, x, q);
        u64 rhs_num, rhs_den;
        if (quartic) {
            // (x^4 - 6x^2 + 1) / (4(x^3 - x))
            const u64 x4 = mulmod_u64(x2, x2, q);
            rhs_num = addm(subm(x4, mulmod_u64(6 % q, x2, q)), 1 % q);
            rhs_den = mulmod_u64(4 % q, mulmod_u64(x, subm(x2, 1 % q), q), q);
        } else {
            // (x^3 - 9x) / (3(x^2 - 1))
            rhs_num = mulmod_u64(x, subm(x2, 9 % q), q);
            rhs_den = mulmod_u64(3 % q, subm(x2, 1 % q), q);
        }
        bool shared = false;
        if (accept_at(lhs_num, lhs_den, rhs_num, rhs_den, q, &shared)) {
            result.holds = true;
            result.witness_x = x;
            result.via_shared_denominator = shared;
            return result;
        }
    }
    return result;
}

}  // namespace

SignedPrime signed_prime(u64 q) {
    if (q % 2 == 0 || !is_prime(q)) throw domain_error("q* requires an odd prime");
    const i64 sq = static_cast<i64>(q);
    return SignedPrime{q, q % 4 == 1 ? sq : -sq};
}

bool euler_oracle(i128 value, const PrimeModulus& p, int k) {
    check_congruence_class(p, k);
    const u64 pv = p.value();
    i128 r = value % static_cast<i128>(pv);
    if (r < 0) r += static_cast<i128>(pv);
    if (r == 0) throw domain_error("euler_oracle requires gcd(value, p) = 1");
    return powmod_u64(static_cast<u64>(r), (pv - 1) / static_cast<u64>(k), pv) == 1;
}

CriterionResult cubic_criterion(u64 q, const Representation& rep) {
    if (rep.kind != RepKind::Cubic4p27) throw domain_error("cubic criterion needs a 4p = L^2+27M^2 representation");
    if (q == 2 || q == 3) throw domain_error("cubic criterion excludes q = 2, 3");
    if (q == rep.p) throw domain_error("cubic criterion excludes q = p");
    if (q % 2 == 0 || !is_prime(q)) throw domain_error("q must be an odd prime");
    return search_criterion(q, rep, /*quartic=*/false);
}

CriterionResult quartic_criterion(u64 q, const Representation& rep) {
    if (rep.kind != RepKind::Quartic4) throw domain_error("quartic criterion needs a p = L^2+4M^2 representation");
    if (q == rep.p) throw domain_error("quartic criterion excludes q = p");
    if (q % 2 == 0 || !is_prime(q)) throw domain_error("q must be an odd prime");
    return search_criterion(q, rep, /*quartic=*/true);
}

namespace {

// single-point evaluation over u128 moduli; the handful of products per
// call keeps the shift-and-add multiply affordable
bool criterion_at_impl(u128 q, const Representation& rep, u128 x, bool quartic) {
    auto mul = [q](u128 a, u128 b) { return mulmod_u128_slow(a, b, q); };
    auto addm = [q](u128 a, u128 b) {
        u128 s = a + b;
        if (s >= q) s -= q;
        return s;
    };
    auto subm = [q](u128 a, u128 b) { return a >= b ? a - b : a + (q - b); };
    const u128 lhs_num = rep.L % q;
    const u128 lhs_den =
        quartic ? mul(2 % q, static_cast<u128>(rep.M) % q) : mul(3 % q, static_cast<u128>(rep.M) % q);
    x %= q;
    const u128 x2 = mul(x, x);
    u128 rhs_num, rhs_den;
    if (quartic) {
        const u128 x4 = mul(x2, x2);
        rhs_num = addm(subm(x4, mul(6 % q, x2)), 1 % q);
        rhs_den = mul(4 % q, mul(x, subm(x2, 1 % q)));
    } else {
        rhs_num = mul(x, subm(x2, 9 % q));
        rhs_den = mul(3 % q, subm(x2, 1 % q));
    }
    if (rhs_den == 0) return lhs_den == 0;
    if (lhs_den == 0) return false;
    return mul(lhs_num, rhs_den) == mul(rhs_num, lhs_den);
}

}  // namespace

bool cubic_criterion_at(u128 q, const Representation& rep, u128 x) {
    return criterion_at_impl(q, rep, x, /*quartic=*/false);
}

bool quartic_criterion_at(u128 q, const Representation& rep, u128 x) {
    return criterion_at_impl(q, rep, x, /*quartic=*/true);
}

int legendre(i128 a, const PrimeModulus& p) {
    if (p.value() == 2) throw domain_error("legendre symbol requires an odd prime");
    return jacobi(a, p.value());
}

u64 smallest_prime_residue(const PrimeModulus& p, int k) {
    check_congruence_class(p, k);
    for (u64 q = 2;; q = next_prime(q)) {
        if (q == p.value()) continue;
        if (euler_oracle(static_cast<i128>(q), p, k)) return q;
    }
}

u64 prime_qr_count_below(const PrimeModulus& p, const std::vector<u64>& primes) {
    const u64 pv = p.value();
    u64 count = 0;
    for (u64 q : primes) {
        if (q >= pv) break;
        if (jacobi(static_cast<i128>(q), pv) == 1) ++count;
    }
    return count;
}

u64 prime_qr_count_below(const PrimeModulus& p) {
    if (p.value() < 3) return 0;
    return prime_qr_count_below(p, primes_up_to(p.value() - 1));
}

}  // namespace residua
