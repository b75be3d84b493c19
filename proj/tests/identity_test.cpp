#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ffnt/extension.hpp"
#include "ffnt/identity.hpp"

using namespace ffnt;

namespace {
Poly make(const FieldPtr& k, std::vector<Elem> c) { return Poly(k, std::move(c)); }
}

TEST_CASE("big_product_F small cases and degree bookkeeping") {
    auto f2 = make_prime_field(2);
    CHECK(big_product_F(f2, 0) == Poly::one(f2));
    CHECK(big_product_F(f2, 1) == make(f2, {0, 1, 1}));  // x(x+1)
    Poly f22 = big_product_F(f2, 2);
    CHECK(f22.degree() == 8);
    for (unsigned n = 0; n <= 4; ++n) {
        CHECK(Nat(big_product_F(f2, n).degree()) == Nat(n) * nat_pow(2, n));
    }
    CHECK_THROWS_AS(big_product_F(f2, 12), BudgetError);  // 12 * 2^12 > 20000
}

TEST_CASE("quotient_Q equals x^(q^n) - x") {
    auto f2 = make_prime_field(2);
    auto f3 = make_prime_field(3);
    CHECK(quotient_Q(f2, 1) == make(f2, {0, 1, 1}));
    CHECK(quotient_Q(f2, 2) == make(f2, {0, 1, 0, 0, 1}));  // x^4+x
    CHECK(quotient_Q(f3, 1) == make(f3, {0, 2, 0, 1}));     // x^3+2x
    for (unsigned n = 1; n <= 4; ++n) {
        CHECK(quotient_Q(f2, n) == xqn_minus_x(f2, n));
        CHECK(quotient_Q(f2, n).degree() == nat_pow(2, n));
    }
}

TEST_CASE("rhs_product over divisor-degree irreducibles") {
    auto f2 = make_prime_field(2);
    auto census = IrreducibleCensus::build(f2, 3);
    CHECK(rhs_product(f2, 1, census) == make(f2, {0, 1, 1}));
    CHECK(rhs_product(f2, 2, census) == make(f2, {0, 1, 0, 0, 1}));
    Poly r3 = rhs_product(f2, 3, census);
    CHECK(r3 == xqn_minus_x(f2, 3));  // x^8 + x
    CHECK_THROWS_AS(rhs_product(f2, 4, census), std::invalid_argument);
}

TEST_CASE("xqn_minus_x construction") {
    auto f2 = make_prime_field(2);
    auto f3 = make_prime_field(3);
    CHECK(xqn_minus_x(f2, 1) == make(f2, {0, 1, 1}));
    CHECK(xqn_minus_x(f3, 1) == make(f3, {0, 2, 0, 1}));
    Poly f = xqn_minus_x(f2, 3);
    CHECK(f.degree() == 8);
    CHECK(f.coeff(1) == 1);
    CHECK_THROWS_AS(xqn_minus_x(f2, 20), BudgetError);
}

TEST_CASE("direct valuation by repeated division") {
    auto f2 = make_prime_field(2);
    CHECK(valuation_direct(Poly::x(f2), make(f2, {0, 1, 1})) == 1);
    CHECK(valuation_direct(make(f2, {1, 1}), make(f2, {1, 0, 1})) == 2);
    CHECK(valuation_direct(make(f2, {1, 1, 1}), Poly::x(f2)) == 0);
    CHECK_THROWS_AS(valuation_direct(make(f2, {1, 0, 1}), Poly::x(f2)), std::invalid_argument);
}

TEST_CASE("valuation formula examples") {
    CHECK(valuation_formula(1, 2, 2) == 3);
    CHECK(valuation_formula(3, 2, 2) == 0);
    CHECK(valuation_formula(2, 2, 2) == 1);
    auto f2 = make_prime_field(2);
    CHECK(valuation_direct(Poly::x(f2), big_product_F(f2, 2)) == 3);
    CHECK(valuation_direct(make(f2, {1, 1, 1}), big_product_F(f2, 2)) == 1);
}

TEST_CASE("full identity verification on the grid") {
    struct GridPoint {
        FieldPtr k;
        unsigned n_max;
    };
    std::vector<GridPoint> grid = {
        {make_prime_field(2), 6},
        {make_prime_field(3), 4},
        {make_prime_field(5), 3},
        {make_field(2, 2), 3},  // GF(4) as coefficient field
    };
    for (const auto& gp : grid) {
        for (unsigned n = 1; n <= gp.n_max; ++n) {
            CAPTURE(gp.k->size());
            CAPTURE(n);
            auto rep = verify_identity(gp.k, n);
            CHECK(rep.identity_holds);
            CHECK(rep.failure.empty());
            CHECK(rep.lhs_degree == nat_pow(Nat(static_cast<unsigned long>(gp.k->size())), n));
            CHECK(rep.lhs_degree == rep.rhs_degree);
            for (const auto& v : rep.valuations) {
                CHECK(v.direct == v.formula);
            }
        }
    }
}

TEST_CASE("valuation dichotomy in the quotient") {
    // in F(n)/F(n-1)^q an irreducible of degree d appears exactly once when
    // d | n and not at all otherwise
    auto f2 = make_prime_field(2);
    unsigned n = 6;
    Poly quotient = quotient_Q(f2, n);
    auto census = IrreducibleCensus::build(f2, n);
    for (std::size_t d = 1; d <= n; ++d) {
        for (const Poly& p : census.list(d)) {
            Nat expected = (n % d == 0) ? 1 : 0;
            CAPTURE(to_string(p));
            CHECK(valuation_direct(p, quotient) == expected);
        }
    }
}

TEST_CASE("degree bound inequality") {
    CHECK(verify_degree_bound(2, 2));   // equality case 4 = 2*1*2
    CHECK(verify_degree_bound(2, 10));  // 1024 >= 320
    CHECK(verify_degree_bound(3, 3));   // 27 >= 6
    for (unsigned long q = 2; q <= 16; ++q) {
        for (unsigned n = 2; n <= 64; ++n) {
            CAPTURE(q);
            CAPTURE(n);
            CHECK(verify_degree_bound(q, n));
        }
    }
    CHECK_THROWS_AS(verify_degree_bound(1, 2), std::invalid_argument);
}
