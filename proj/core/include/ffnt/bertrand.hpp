#pragma once

// Integer-side parallel of the polynomial identities: valuations of central
// binomial coefficients via factorial valuations, the prime-power bound
// p^(v_p) <= 2N, the Pascal-row size bounds, and an exhaustive witness scan
// for primes in (N, 2N].

#include <cstdint>
#include <vector>

#include "ffnt/arith.hpp"

namespace ffnt {

/// Exponent of p in C(2N, N): sum of (floor(2N/p^k) - 2*floor(N/p^k)).
Nat vp_central_binomial(const Nat& n, const Nat& p);

/// p^(v_p(C(2N,N))) <= 2N; always true, the computational heart of the
/// postulate's proof.
bool check_prime_power_bound(const Nat& n, const Nat& p);

struct BinomialBoundsReport {
    Nat n;
    Nat value;  // C(2N, N)
    bool lower_ok = false;  // 4^N <= (2N+1) * C(2N,N)
    bool upper_ok = false;  // C(2N,N) <= 4^N
    bool pass() const { return lower_ok && upper_ok; }
};

/// Both Pascal-row bounds checked with cross-multiplied exact integers.
BinomialBoundsReport central_binomial_bounds(const Nat& n);

struct BinomialValuationProfile {
    Nat n;
    Nat value;  // C(2N, N)
    std::vector<std::pair<Nat, Nat>> per_prime;  // (p, v_p) for primes <= 2N with v_p > 0
};

BinomialValuationProfile binomial_profile(const Nat& n);

struct PostulateCertificate {
    std::uint64_t n = 0;
    std::uint64_t witness = 0;  // smallest prime in (n, 2n]
};

PostulateCertificate find_bertrand_witness(std::uint64_t n);

struct ScanSummary {
    std::uint64_t max_n = 0;
    std::uint64_t certificates = 0;
    std::uint64_t largest_gap = 0;    // max over N of witness - N
    std::uint64_t largest_gap_n = 0;  // N attaining it (smallest such N)
    bool pass = false;
};

/// Certificates for every N in [2, max_n], sieve-backed. The range may be
/// partitioned across jobs; the summary is identical for any job count.
/// A missing witness throws (it would refute the postulate).
ScanSummary scan_postulate(std::uint64_t max_n, unsigned jobs = 1,
                           std::vector<PostulateCertificate>* certificates = nullptr);

/// Bit-per-integer primality table for [0, limit].
std::vector<std::uint8_t> prime_sieve(std::uint64_t limit);

}  // namespace ffnt
