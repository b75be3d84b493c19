#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ffnt/arith.hpp"
#include "ffnt/bertrand.hpp"

using namespace ffnt;

namespace {

Nat factorial(unsigned n) {
    Nat r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// exponent of p in the factorization of n, by direct division
Nat exponent_in(const Nat& n, const Nat& p) {
    Nat v = 0, m = n;
    while (m % p == 0) {
        m /= p;
        ++v;
    }
    return v;
}

}  // namespace

TEST_CASE("is_prime on small and checked values") {
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(0));
    CHECK(is_prime(1009));  // trial division by all d <= 31 finds no factor
    CHECK_FALSE(is_prime(1007));  // 19 * 53

    auto sieve = prime_sieve(2000);
    for (std::uint64_t n = 0; n <= 2000; ++n) {
        CAPTURE(n);
        CHECK(is_prime_u64(n) == (sieve[n] != 0));
    }
}

TEST_CASE("moebius values and fundamental identity") {
    CHECK(moebius(1) == 1);
    CHECK(moebius(6) == 1);
    CHECK(moebius(12) == 0);
    CHECK(moebius(30) == -1);
    CHECK_THROWS_AS(moebius(0), std::invalid_argument);

    for (unsigned long n = 1; n <= 10000; ++n) {
        int sum = 0;
        for (const Nat& d : divisors(Nat(n))) sum += moebius(d);
        CAPTURE(n);
        CHECK(sum == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("divisors are ascending, exact and closed under d -> n/d") {
    CHECK(divisors(1) == std::vector<Nat>{1});
    CHECK(divisors(12) == std::vector<Nat>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(7) == std::vector<Nat>{1, 7});
    CHECK_THROWS_AS(divisors(0), std::invalid_argument);

    for (unsigned long n = 1; n <= 300; ++n) {
        auto ds = divisors(Nat(n));
        for (std::size_t i = 0; i < ds.size(); ++i) {
            CHECK(n % ds[i] == 0);
            if (i > 0) CHECK(ds[i - 1] < ds[i]);
            // complement must be in the list
            Nat c = Nat(n) / ds[i];
            CHECK(std::find(ds.begin(), ds.end(), c) != ds.end());
        }
    }
}

TEST_CASE("legendre_valuation matches direct factorial factorization") {
    CHECK(legendre_valuation(10, 2) == exponent_in(factorial(10), 2));
    CHECK(legendre_valuation(10, 2) == 8);
    CHECK(legendre_valuation(5, 7) == 0);
    CHECK(legendre_valuation(100, 5) == 24);
    CHECK(legendre_valuation(100, 5) == exponent_in(factorial(100), 5));
    CHECK_THROWS_AS(legendre_valuation(10, 4), std::invalid_argument);

    for (unsigned n = 1; n <= 30; ++n) {
        Nat nf = factorial(n);
        for (unsigned long p = 2; p <= n; ++p) {
            if (!is_prime_u64(p)) continue;
            CAPTURE(n);
            CAPTURE(p);
            CHECK(legendre_valuation(n, p) == exponent_in(nf, p));
        }
    }
}

TEST_CASE("central_binomial exact values") {
    CHECK(central_binomial(1) == 2);
    CHECK(central_binomial(5) == 252);
    CHECK(central_binomial(30) == Nat("118264581564861424"));
    CHECK_THROWS_AS(central_binomial(0), std::invalid_argument);
}

TEST_CASE("factorize reconstructs and orders primes") {
    CHECK(factorize(1).factors.empty());
    auto f252 = factorize(252);
    REQUIRE(f252.factors.size() == 3);
    CHECK(f252.factors[0] == std::pair<Nat, unsigned>{2, 2});
    CHECK(f252.factors[1] == std::pair<Nat, unsigned>{3, 2});
    CHECK(f252.factors[2] == std::pair<Nat, unsigned>{7, 1});
    auto f1024 = factorize(1024);
    REQUIRE(f1024.factors.size() == 1);
    CHECK(f1024.factors[0] == std::pair<Nat, unsigned>{2, 10});
    CHECK_THROWS_AS(factorize(0), std::invalid_argument);

    for (unsigned long n = 1; n <= 2000; ++n) {
        auto f = factorize(Nat(n));
        CHECK(f.product() == n);
        for (std::size_t i = 0; i < f.factors.size(); ++i) {
            CHECK(is_prime(f.factors[i].first));
            if (i > 0) CHECK(f.factors[i - 1].first < f.factors[i].first);
        }
    }
}
