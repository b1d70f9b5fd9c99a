#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace divseq {

/// Sequence indices and everything derived from them (divisors, radicals,
/// prime factors). Index arithmetic stays within 64 bits by design; only
/// sequence *values* need arbitrary precision.
using Index = std::uint64_t;

struct PrimePower {
    Index prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical factorization: primes strictly increasing, exponents >= 1,
/// empty for n = 1.
struct Factorization {
    std::vector<PrimePower> prime_powers;

    Index value() const;

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// All divisors of n in ascending order (so first is 1, last is n).
std::vector<Index> divisors(Index n);

/// Moebius function: 1 at 1, 0 when a square divides n, else (-1)^#primes.
int mobius(Index n);

/// Batch Moebius values mu[0..upto] by sieve; mu[0] is 0 by convention.
/// Cross-checks the factorization-based mobius() in tests.
std::vector<int> mobius_sieve(Index upto);

/// Product of the distinct primes dividing n; radical(1) = 1.
Index radical(Index n);

/// Largest alpha with p^alpha | n. Rejects non-prime p and n = 0.
unsigned valuation(Index p, Index n);

Factorization factorize(Index n);

/// p when n = p^alpha for some alpha >= 1, empty otherwise. Requires n >= 2.
std::optional<Index> prime_power_root(Index n);

bool is_prime(Index n);

/// Euler totient, computed from the factorization.
Index totient(Index n);

}  // namespace divseq
