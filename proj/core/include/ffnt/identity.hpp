#pragma once

// Brute-force construction of the product F(n) of all monic polynomials of
// degree n, and exact verification of the identities it satisfies:
//   F(n) / F(n-1)^q  =  product of monic irreducibles of degree dividing n
//                    =  x^(q^n) - x,
// together with the valuation formula v_P(F(n)) = sum_{k>=1, kd<=n} q^(n-kd)
// and the degree inequality q^n >= 2*floor(n/2)*q^floor(n/2).

#include <string>
#include <vector>

#include "ffnt/irreducible.hpp"

namespace ffnt {

/// Raised when a construction would exceed the configured degree budget.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr unsigned long kDefaultDegreeBudget = 20000;

/// Product of all monic polynomials of degree n; degree n * q^n.
Poly big_product_F(const FieldPtr& k, unsigned n,
                   unsigned long degree_budget = kDefaultDegreeBudget);

/// F(n) / F(n-1)^q, asserted to divide exactly; degree q^n.
Poly quotient_Q(const FieldPtr& k, unsigned n,
                unsigned long degree_budget = kDefaultDegreeBudget);

/// Product of all monic irreducibles whose degree divides n.
Poly rhs_product(const FieldPtr& k, unsigned n, const IrreducibleCensus& census);

/// The monic polynomial x^(q^n) - x.
Poly xqn_minus_x(const FieldPtr& k, unsigned n,
                 unsigned long degree_budget = kDefaultDegreeBudget);

/// Largest k with P^k | f, by repeated division. P must pass the fast
/// irreducibility test.
Nat valuation_direct(const Poly& P, const Poly& f);

/// Sum over k >= 1 with k*d <= n of q^(n - k*d); terms with k*d > n are
/// omitted rather than computed as fractions.
Nat valuation_formula(unsigned d, unsigned n, const Nat& q);

struct ValuationRecord {
    Poly p;
    Nat direct;
    Nat formula;
};

struct IdentityReport {
    Nat q;
    unsigned n = 0;
    Nat lhs_degree;
    Nat rhs_degree;
    bool identity_holds = false;  // quotient == irreducible product == x^(q^n) - x
    std::vector<ValuationRecord> valuations;
    std::string failure;  // empty on success
};

/// Full verification at one grid point: product identity, degree
/// bookkeeping, and the valuation cross-check for every monic irreducible
/// of degree <= n.
IdentityReport verify_identity(const FieldPtr& k, unsigned n,
                               unsigned long degree_budget = kDefaultDegreeBudget);

/// The inequality q^n >= 2 * floor(n/2) * q^floor(n/2), true for all
/// q >= 2 and n >= 2; its truth is what forces existence.
bool verify_degree_bound(const Nat& q, unsigned n);

}  // namespace ffnt
