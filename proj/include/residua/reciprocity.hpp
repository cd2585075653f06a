#pragma once

#include <optional>

#include "residua/arith.hpp"
#include "residua/represent.hpp"

namespace residua {

/// Outcome of a rational residuacity criterion: holds iff some x in
/// [0, q) satisfies the defining congruence of fractions mod q, under
/// the shared-denominator convention (an x with vanishing right-hand
/// denominator counts only when the left-hand denominator vanishes too).
struct CriterionResult {
    bool holds = false;
    std::optional<u64> witness_x;  // least accepting x, present iff holds
    bool via_shared_denominator = false;
};

/// q* = (-1)^((q-1)/2) q, the signed prime ≡ 1 (mod 4).
struct SignedPrime {
    u64 q = 0;
    i64 q_star = 0;
};

SignedPrime signed_prime(u64 q);

/// Euler criterion: true iff value^((p-1)/k) ≡ 1 (mod p), i.e. value is
/// a k-th power residue mod p. Requires p ≡ 1 (mod k) and p ∤ value.
bool euler_oracle(i128 value, const PrimeModulus& p, int k);

/// Cubic residuacity of q mod p via L/3M ≡ (x^3-9x)/(3(x^2-1)) (mod q).
/// q must be an odd prime not in {3, p}; rep of kind Cubic4p27.
CriterionResult cubic_criterion(u64 q, const Representation& rep);

/// Biquadratic residuacity of q* mod p via
/// L/2M ≡ (x^4-6x^2+1)/(4(x^3-x)) (mod q). q odd prime, q != p.
CriterionResult quartic_criterion(u64 q, const Representation& rep);

/// Evaluates the cubic criterion congruence at one candidate x (same
/// shared-denominator rules); scales to q far beyond exhaustive search.
bool cubic_criterion_at(u128 q, const Representation& rep, u128 x);

bool quartic_criterion_at(u128 q, const Representation& rep, u128 x);

/// Legendre symbol (a | p) in {-1, 0, 1}; p an odd prime.
int legendre(i128 a, const PrimeModulus& p);

/// r_k(p): the least prime q (q != p) that is a k-th power residue
/// mod p, found by oracle scan. k in {2, 3, 4}.
u64 smallest_prime_residue(const PrimeModulus& p, int k);

/// Number of primes q < p that are quadratic residues mod p, by direct
/// Legendre scan over a caller-supplied ascending prime list covering
/// [2, p). Used for the p^(1/9) count check.
u64 prime_qr_count_below(const PrimeModulus& p, const std::vector<u64>& primes);

/// Convenience overload that sieves its own prime list (costly for
/// large p; intended for p up to ~10^7).
u64 prime_qr_count_below(const PrimeModulus& p);

}  // namespace residua
