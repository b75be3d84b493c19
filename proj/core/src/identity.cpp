#include "ffnt/identity.hpp"

namespace ffnt {

namespace {

void check_budget(const Nat& degree, unsigned long budget, const char* what) {
    if (degree > budget) {
        throw BudgetError(std::string(what) + ": resulting degree " + degree.get_str() +
                          " exceeds budget " + std::to_string(budget));
    }
}

}  // namespace

Poly big_product_F(const FieldPtr& k, unsigned n, unsigned long degree_budget) {
    Nat q(static_cast<unsigned long>(k->size()));
    check_budget(Nat(n) * nat_pow(q, n), degree_budget, "big_product_F");
    Poly acc = Poly::one(k);
    Nat count = nat_pow(q, n);
    for (Nat i = 0; i < count; ++i) {
        acc = acc * monic_by_index(k, n, i);
    }
    return acc;
}

Poly quotient_Q(const FieldPtr& k, unsigned n, unsigned long degree_budget) {
    if (n < 1) throw std::invalid_argument("quotient_Q: n must be >= 1");
    Poly fn = big_product_F(k, n, degree_budget);
    Poly denom = Poly::one(k);
    if (n >= 1) {
        Poly fprev = big_product_F(k, n - 1, degree_budget);
        for (std::uint64_t i = 0; i < k->size(); ++i) denom = denom * fprev;
    }
    auto [quot, rem] = poly_divmod(fn, denom);
    if (!rem.is_zero())
        throw std::logic_error("quotient_Q: F(n-1)^q does not divide F(n) (arithmetic bug)");
    return quot;
}

Poly rhs_product(const FieldPtr& k, unsigned n, const IrreducibleCensus& census) {
    Poly acc = Poly::one(k);
    for (const Nat& dn : divisors(Nat(n))) {
        std::size_t d = dn.get_ui();
        if (!census.covers(d) || !census.has_list(d))
            throw std::invalid_argument("rhs_product: census lacks polynomial list for a divisor");
        for (const Poly& p : census.list(d)) acc = acc * p;
    }
    return acc;
}

Poly xqn_minus_x(const FieldPtr& k, unsigned n, unsigned long degree_budget) {
    Nat qn = nat_pow(Nat(static_cast<unsigned long>(k->size())), n);
    check_budget(qn, degree_budget, "xqn_minus_x");
    std::vector<Elem> c(qn.get_ui() + 1, Field::zero);
    c[1] = k->neg(Field::one);
    c.back() = Field::one;
    return Poly(k, std::move(c));
}

Nat valuation_direct(const Poly& P, const Poly& f) {
    if (!is_irreducible_fast(P)) throw std::invalid_argument("valuation_direct: P is reducible");
    if (f.is_zero()) throw std::invalid_argument("valuation_direct: f must be nonzero");
    Nat v = 0;
    Poly rest = f;
    while (true) {
        auto [q, r] = poly_divmod(rest, P);
        if (!r.is_zero()) break;
        ++v;
        rest = std::move(q);
    }
    return v;
}

Nat valuation_formula(unsigned d, unsigned n, const Nat& q) {
    if (d < 1) throw std::invalid_argument("valuation_formula: d must be >= 1");
    Nat total = 0;
    for (unsigned k = 1; k * d <= n; ++k) {
        total += nat_pow(q, n - k * d);
    }
    return total;
}

IdentityReport verify_identity(const FieldPtr& k, unsigned n, unsigned long degree_budget) {
    if (n < 1) throw std::invalid_argument("verify_identity: n must be >= 1");
    IdentityReport rep;
    rep.q = Nat(static_cast<unsigned long>(k->size()));
    rep.n = n;

    auto census = IrreducibleCensus::build(k, n);
    Poly lhs = quotient_Q(k, n, degree_budget);
    Poly rhs = rhs_product(k, n, census);
    Poly target = xqn_minus_x(k, n, degree_budget);

    rep.lhs_degree = Nat(static_cast<unsigned long>(lhs.degree()));
    rep.rhs_degree = Nat(static_cast<unsigned long>(rhs.degree()));

    if (!(lhs == rhs)) {
        rep.failure = "quotient F(n)/F(n-1)^q differs from the irreducible product";
        return rep;
    }
    if (!(lhs == target)) {
        rep.failure = "quotient differs from x^(q^n) - x";
        return rep;
    }
    if (rep.lhs_degree != nat_pow(rep.q, n)) {
        rep.failure = "left-side degree is not q^n";
        return rep;
    }

    Poly fn = big_product_F(k, n, degree_budget);
    for (std::size_t d = 1; d <= n; ++d) {
        for (const Poly& p : census.list(d)) {
            ValuationRecord rec{p, valuation_direct(p, fn), valuation_formula(d, n, rep.q)};
            bool ok = rec.direct == rec.formula;
            rep.valuations.push_back(std::move(rec));
            if (!ok) {
                rep.failure = "valuation mismatch at P = " + to_string(p);
                return rep;
            }
        }
    }
    rep.identity_holds = true;
    return rep;
}

bool verify_degree_bound(const Nat& q, unsigned n) {
    if (q < 2 || n < 2)
        throw std::invalid_argument("verify_degree_bound: requires q >= 2 and n >= 2");
    unsigned half = n / 2;
    return nat_pow(q, n) >= 2 * half * nat_pow(q, half);
}

}  // namespace ffnt
