#pragma once

// Irreducibility testing and counting. Two independent paths are kept on
// purpose: trial division over all low-degree monics (the slow oracle) and
// the Frobenius-based test (the production path). Counts come either from
// exhaustive enumeration or from the Moebius-inverted form of Gauss's
// relation, pi(n) = (1/n) * sum_{d|n} mu(d) q^(n/d).

#include <map>
#include <optional>
#include <vector>

#include "ffnt/poly.hpp"

namespace ffnt {

/// Brute-force irreducibility: no monic divisor of degree in
/// [1, floor(deg f / 2)]. Rejects constants.
bool is_irreducible_oracle(const Poly& f);

/// Frobenius-based test: x^(q^n) = x mod f and, for every prime l | n,
/// gcd(x^(q^(n/l)) - x, f) = 1. Requires monic nonconstant input.
bool is_irreducible_fast(const Poly& f);

/// All monic irreducibles of degree d in canonical index order. d >= 1.
std::vector<Poly> enumerate_irreducibles(const FieldPtr& k, std::size_t d);

/// Number of monic irreducibles of degree n over a field of size q, by
/// Moebius inversion. The divisor sum is asserted divisible by n.
Nat count_moebius(const Nat& q, unsigned n);

/// Per-degree census of monic irreducibles. Full polynomial lists are kept
/// only while q^d stays at or below list_limit; counts are always present.
class IrreducibleCensus {
public:
    static constexpr std::uint64_t kDefaultListLimit = 1u << 16;

    /// Census by exhaustive enumeration over a realized field.
    static IrreducibleCensus build(const FieldPtr& k, std::size_t max_degree,
                                   std::uint64_t list_limit = kDefaultListLimit);

    /// Counts-only census from the Moebius formula; no field required.
    static IrreducibleCensus from_moebius(const Nat& q, std::size_t max_degree);

    /// Counts-only census from explicit values, counts[i] = pi(i + 1).
    static IrreducibleCensus from_counts(const Nat& q, const std::vector<Nat>& counts);

    const Nat& q() const { return q_; }
    std::size_t max_degree() const { return max_degree_; }
    bool covers(std::size_t d) const { return d >= 1 && d <= max_degree_; }

    const Nat& count(std::size_t d) const;
    bool has_list(std::size_t d) const;
    const std::vector<Poly>& list(std::size_t d) const;

private:
    Nat q_;
    std::size_t max_degree_ = 0;
    std::map<std::size_t, Nat> counts_;
    std::map<std::size_t, std::vector<Poly>> lists_;
};

struct GaussTerm {
    std::size_t d;
    Nat pi;    // pi(d)
    Nat term;  // d * pi(d)
};

struct GaussReport {
    Nat q;
    unsigned n = 0;
    Nat lhs;  // q^n
    Nat rhs;  // sum over d | n of d * pi(d)
    std::vector<GaussTerm> terms;
    bool pass = false;
};

/// Checks q^n = sum_{d|n} d * pi(d, F) with exact arithmetic. The census
/// must cover every divisor of n.
GaussReport verify_gauss(const Nat& q, unsigned n, const IrreducibleCensus& census);

}  // namespace ffnt
