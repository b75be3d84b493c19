#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ffnt/extension.hpp"
#include "ffnt/field.hpp"

using namespace ffnt;

TEST_CASE("prime field arithmetic examples") {
    auto f5 = make_prime_field(5);
    CHECK(f5->add(3, 4) == 2);
    auto f2 = make_prime_field(2);
    CHECK(f2->add(1, 1) == 0);
    auto f7 = make_prime_field(7);
    CHECK(f7->mul(3, 5) == 1);
    CHECK(f7->inv(3) == 5);
    CHECK(f5->inv(1) == 1);
    CHECK(f2->inv(1) == 1);
    CHECK_THROWS_AS(f5->inv(0), std::domain_error);
    CHECK_THROWS_AS(make_prime_field(4), std::invalid_argument);
}

TEST_CASE("element enumeration is canonical 0..p-1") {
    for (std::uint64_t p : {2, 3, 5}) {
        auto k = make_prime_field(p);
        auto elems = enumerate_elements(*k);
        REQUIRE(elems.size() == p);
        for (std::uint64_t i = 0; i < p; ++i) CHECK(elems[i] == i);
    }
}

TEST_CASE("mixed-field operands are rejected") {
    auto f5 = make_prime_field(5);
    auto f7 = make_prime_field(7);
    FieldElem a{f5, 3}, b{f7, 3};
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    // same field constructed twice is still the same field
    FieldElem c{make_prime_field(5), 4};
    CHECK((a + c).v == 2);
}

TEST_CASE("exhaustive field axioms for small primes") {
    for (std::uint64_t p : {2, 3, 5, 7, 11}) {
        CAPTURE(p);
        auto rep = verify_field_axioms(make_prime_field(p));
        CHECK(rep.pass);
        CHECK(rep.exhaustive);
        CHECK(rep.checked_triples == p * p * p);
    }
}

TEST_CASE("inv is an involution and Fermat holds") {
    for (std::uint64_t p : {2, 3, 5, 7, 11}) {
        auto k = make_prime_field(p);
        Nat pn(static_cast<unsigned long>(p));
        for (Elem a = 0; a < p; ++a) {
            if (a != 0) CHECK(k->inv(k->inv(a)) == a);
            CHECK(k->pow(a, pn) == a);
        }
    }
}
