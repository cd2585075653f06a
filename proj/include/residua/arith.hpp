#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "residua/errors.hpp"
#include "residua/int128.hpp"

namespace residua {

/// Deterministic primality test for the full 64-bit range (strong
/// pseudoprime witness set, no probabilistic false positives).
bool is_prime(u64 n);

/// Primality for wide inputs as produced by polynomial evaluation:
/// deterministic below 2^64, Baillie-PSW above (no counterexample is
/// known anywhere; verified exhaustively below 2^64).
bool is_prime_u128(u128 n);

/// A modulus certified prime at construction.
class PrimeModulus {
  public:
    explicit PrimeModulus(u64 p) : value_(p) {
        if (!is_prime(p)) throw domain_error("modulus " + std::to_string(p) + " is not prime");
    }
    u64 value() const { return value_; }

  private:
    u64 value_;
};

struct Factorization {
    u128 base = 1;
    std::vector<std::pair<u128, u32>> factors;  // (prime, exponent), ascending
};

u64 mulmod_u64(u64 a, u64 b, u64 m);
u64 powmod_u64(u64 base, u64 exp, u64 m);

/// base^exponent mod modulus, result in [0, modulus).
u64 mod_pow(i64 base, u64 exponent, const PrimeModulus& modulus);

/// Multiplicative inverse mod a prime. Throws domain_error when
/// a ≡ 0 (mod modulus).
u64 mod_inverse(i64 a, const PrimeModulus& modulus);

u64 mod_inverse_u64(u64 a, u64 m);
u128 mod_inverse_u128(u128 a, u128 m);

/// Tonelli-Shanks square root mod an odd prime. Returns the canonical
/// root in [0, p/2], or nullopt when a is a quadratic non-residue.
std::optional<u64> mod_sqrt(u64 a, const PrimeModulus& modulus);

/// Jacobi symbol (a | n) for odd n > 0.
int jacobi(i128 a, u128 n);

/// All primes <= limit, ascending (segmented sieve). Supported up to 10^9.
std::vector<u64> primes_up_to(u64 limit);

/// Complete factorization. n = 1 yields an empty factor list. Every
/// returned prime passes the primality test and the product of
/// prime^exponent equals n (asserted internally).
Factorization factorize(u128 n);

/// Factorization of an integer already known to have no prime factor
/// <= rough_bound (sieved values); skips the trial-division stage.
Factorization factorize_rough(u128 n, u64 rough_bound);

/// Smallest prime strictly greater than n (n + small scan via is_prime).
u64 next_prime(u64 n);

}  // namespace residua
