#include "ffnt/bertrand.hpp"

#include <stdexcept>
#include <thread>

namespace ffnt {

Nat vp_central_binomial(const Nat& n, const Nat& p) {
    if (n < 1) throw std::invalid_argument("vp_central_binomial: N must be >= 1");
    if (!is_prime(p)) throw std::invalid_argument("vp_central_binomial: p must be prime");
    Nat two_n = 2 * n;
    Nat total = 0;
    Nat pk = p;
    while (pk <= two_n) {
        total += two_n / pk - 2 * (n / pk);
        pk *= p;
    }
    return total;
}

bool check_prime_power_bound(const Nat& n, const Nat& p) {
    Nat v = vp_central_binomial(n, p);
    if (!v.fits_ulong_p()) return false;
    Nat pv;
    mpz_pow_ui(pv.get_mpz_t(), p.get_mpz_t(), v.get_ui());
    return pv <= 2 * n;
}

BinomialBoundsReport central_binomial_bounds(const Nat& n) {
    BinomialBoundsReport rep;
    rep.n = n;
    rep.value = central_binomial(n);
    Nat four_n = nat_pow(Nat(4), n.get_ui());
    rep.lower_ok = four_n <= (2 * n + 1) * rep.value;
    rep.upper_ok = rep.value <= four_n;
    return rep;
}

BinomialValuationProfile binomial_profile(const Nat& n) {
    BinomialValuationProfile prof;
    prof.n = n;
    prof.value = central_binomial(n);
    Nat two_n = 2 * n;
    if (!two_n.fits_ulong_p())
        throw std::invalid_argument("binomial_profile: N out of supported range");
    auto sieve = prime_sieve(two_n.get_ui());
    for (std::uint64_t p = 2; p <= two_n.get_ui(); ++p) {
        if (!sieve[p]) continue;
        Nat v = vp_central_binomial(n, Nat(static_cast<unsigned long>(p)));
        if (v > 0) prof.per_prime.emplace_back(Nat(static_cast<unsigned long>(p)), v);
    }
    return prof;
}

std::vector<std::uint8_t> prime_sieve(std::uint64_t limit) {
    std::vector<std::uint8_t> is_p(limit + 1, 1);
    is_p[0] = 0;
    if (limit >= 1) is_p[1] = 0;
    for (std::uint64_t i = 2; i * i <= limit; ++i) {
        if (!is_p[i]) continue;
        for (std::uint64_t j = i * i; j <= limit; j += i) is_p[j] = 0;
    }
    return is_p;
}

PostulateCertificate find_bertrand_witness(std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("find_bertrand_witness: N must be >= 1");
    for (std::uint64_t c = n + 1; c <= 2 * n; ++c) {
        if (is_prime_u64(c)) return {n, c};
    }
    throw std::logic_error("find_bertrand_witness: no prime in (N, 2N] (refutes the postulate)");
}

ScanSummary scan_postulate(std::uint64_t max_n, unsigned jobs,
                           std::vector<PostulateCertificate>* certificates) {
    if (max_n < 2) throw std::invalid_argument("scan_postulate: max_N must be >= 2");
    if (jobs == 0) jobs = 1;
    auto sieve = prime_sieve(2 * max_n);

    std::vector<std::uint64_t> witness(max_n + 1, 0);
    auto worker = [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t n = lo; n <= hi; ++n) {
            for (std::uint64_t c = n + 1; c <= 2 * n; ++c) {
                if (sieve[c]) {
                    witness[n] = c;
                    break;
                }
            }
        }
    };

    if (jobs == 1 || max_n < 64) {
        worker(2, max_n);
    } else {
        std::vector<std::thread> threads;
        std::uint64_t span = max_n - 1;
        for (unsigned j = 0; j < jobs; ++j) {
            std::uint64_t lo = 2 + span * j / jobs;
            std::uint64_t hi = 2 + span * (j + 1) / jobs - 1;
            if (lo <= hi) threads.emplace_back(worker, lo, hi);
        }
        for (auto& t : threads) t.join();
    }

    ScanSummary s;
    s.max_n = max_n;
    for (std::uint64_t n = 2; n <= max_n; ++n) {
        if (witness[n] == 0)
            throw std::logic_error("scan_postulate: missing witness (refutes the postulate)");
        ++s.certificates;
        std::uint64_t gap = witness[n] - n;
        if (gap > s.largest_gap) {
            s.largest_gap = gap;
            s.largest_gap_n = n;
        }
        if (certificates) certificates->push_back({n, witness[n]});
    }
    s.pass = true;
    return s;
}

}  // namespace ffnt
