#pragma once

// Exact integer number theory shared by every other module: primality,
// factorization, divisor lists, the Moebius function and factorial
// valuations. All values are arbitrary-precision (GMP); nothing wraps.

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace ffnt {

using Nat = mpz_class;

/// Deterministic primality test, exact over the full supported range.
/// Values fitting in 64 bits use a fixed Miller-Rabin witness set that is
/// deterministic below 3.3e24; larger values fall back to trial division.
bool is_prime(const Nat& n);
bool is_prime_u64(std::uint64_t n);

/// Moebius function: 0 if n has a squared prime factor, otherwise
/// (-1)^(number of distinct prime factors). Rejects n = 0.
int moebius(const Nat& n);

/// All positive divisors of n, ascending. Rejects n = 0.
std::vector<Nat> divisors(const Nat& n);

/// Exponent of the prime p in n!, computed as sum of floor(n / p^k).
Nat legendre_valuation(const Nat& n, const Nat& p);

/// Exact central binomial coefficient C(2N, N).
Nat central_binomial(const Nat& n);

struct Factorization {
    // primes strictly increasing, exponents >= 1
    std::vector<std::pair<Nat, unsigned>> factors;

    Nat product() const;
};

/// Complete prime factorization by trial division. Rejects n = 0.
Factorization factorize(const Nat& n);

/// q^e as an exact integer.
Nat nat_pow(const Nat& q, unsigned long e);

}  // namespace ffnt
