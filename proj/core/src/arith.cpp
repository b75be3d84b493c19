#include "ffnt/arith.hpp"

namespace ffnt {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1) r = mulmod_u64(r, b, m);
        b = mulmod_u64(b, b, m);
        e >>= 1;
    }
    return r;
}

// Miller-Rabin round for odd n > 2 with n-1 = d * 2^s.
bool witness_composite(std::uint64_t a, std::uint64_t n, std::uint64_t d, int s) {
    std::uint64_t x = powmod_u64(a % n, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < s; ++i) {
        x = mulmod_u64(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set is deterministic for all n < 3.3e24, which covers uint64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (witness_composite(a, n, d, s)) return false;
    }
    return true;
}

bool is_prime(const Nat& n) {
    if (n < 2) return false;
    if (n.fits_ulong_p()) return is_prime_u64(n.get_ui());
    // Desk-scale fallback: exact trial division.
    if (n % 2 == 0) return false;
    for (Nat d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

int moebius(const Nat& n) {
    if (n == 0) throw std::invalid_argument("moebius: n must be >= 1");
    int k = 0;
    Nat m = n;
    for (Nat d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            m /= d;
            if (m % d == 0) return 0;
            ++k;
        }
    }
    if (m > 1) ++k;
    return (k % 2 == 0) ? 1 : -1;
}

std::vector<Nat> divisors(const Nat& n) {
    if (n == 0) throw std::invalid_argument("divisors: n must be >= 1");
    std::vector<Nat> small, large;
    for (Nat d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

Nat legendre_valuation(const Nat& n, const Nat& p) {
    if (!is_prime(p)) throw std::invalid_argument("legendre_valuation: p must be prime");
    Nat total = 0;
    Nat pk = p;
    while (pk <= n) {
        total += n / pk;
        pk *= p;
    }
    return total;
}

Nat central_binomial(const Nat& n) {
    if (n < 1) throw std::invalid_argument("central_binomial: N must be >= 1");
    if (!n.fits_ulong_p()) throw std::invalid_argument("central_binomial: N out of supported range");
    unsigned long ul = n.get_ui();
    Nat r;
    mpz_bin_uiui(r.get_mpz_t(), 2 * ul, ul);
    return r;
}

Nat Factorization::product() const {
    Nat r = 1;
    for (const auto& [p, e] : factors) {
        Nat pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        r *= pe;
    }
    return r;
}

Factorization factorize(const Nat& n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be >= 1");
    Factorization f;
    Nat m = n;
    for (Nat d = 2; d * d <= m; d == 2 ? d = 3 : d += 2) {
        if (m % d == 0) {
            unsigned e = 0;
            while (m % d == 0) {
                m /= d;
                ++e;
            }
            f.factors.emplace_back(d, e);
        }
    }
    if (m > 1) f.factors.emplace_back(m, 1);
    return f;
}

Nat nat_pow(const Nat& q, unsigned long e) {
    Nat r;
    mpz_pow_ui(r.get_mpz_t(), q.get_mpz_t(), e);
    return r;
}

}  // namespace ffnt
