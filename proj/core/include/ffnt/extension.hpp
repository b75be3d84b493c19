#pragma once

// Quotient-ring construction of extension fields: GF(q0^n) = K[x]/(P) for an
// irreducible modulus P of degree n over a base field K of size q0. Elements
// are canonical residue polynomials of degree < n, indexed by
// sum of idx(a_i) * q0^i, so the result satisfies the same Field interface
// and can itself serve as a base for towers.

#include <cstdint>
#include <optional>

#include "ffnt/poly.hpp"

namespace ffnt {

struct SearchStrategy {
    enum class Mode { kLexFirst, kRandom };
    Mode mode = Mode::kLexFirst;
    std::uint64_t seed = 0;  // used only in random mode

    static SearchStrategy lex_first() { return {}; }
    static SearchStrategy random(std::uint64_t seed) { return {Mode::kRandom, seed}; }
};

/// A monic irreducible of degree n over K. Lex-first mode returns the first
/// hit in canonical index order; random mode samples from a seeded mt19937_64
/// and falls back to the lex scan if sampling runs long. Theorem-level
/// existence makes a fully exhausted scan an invariant violation.
Poly find_irreducible(const FieldPtr& k, unsigned n,
                      const SearchStrategy& strategy = SearchStrategy::lex_first());

class ExtensionField final : public Field {
public:
    /// Multiplication/addition tables are precomputed at construction for
    /// fields up to this size; beyond it every operation reduces residues.
    static constexpr std::uint64_t kTableLimit = 512;

    ExtensionField(FieldPtr base, Poly modulus);

    std::uint64_t size() const override { return q_; }
    std::uint64_t characteristic() const override { return base_->characteristic(); }

    Elem add(Elem a, Elem b) const override;
    Elem sub(Elem a, Elem b) const override;
    Elem mul(Elem a, Elem b) const override;
    Elem neg(Elem a) const override;
    Elem inv(Elem a) const override;

    std::string spec() const override;
    std::string elem_to_string(Elem a) const override;
    std::vector<std::string> tower_description() const override;

    const FieldPtr& base() const { return base_; }
    const Poly& modulus() const { return modulus_; }
    unsigned extension_degree() const { return n_; }

    /// Residue polynomial over the base field for an element index.
    Poly decode(Elem a) const;
    Elem encode(const Poly& residue) const;

private:
    Elem add_slow(Elem a, Elem b) const;
    Elem mul_slow(Elem a, Elem b) const;
    void build_tables();

    FieldPtr base_;
    Poly modulus_;
    unsigned n_;
    std::uint64_t q_;

    std::vector<std::uint16_t> add_table_;
    std::vector<std::uint16_t> mul_table_;
    std::vector<std::uint16_t> neg_table_;
    std::vector<std::uint16_t> inv_table_;
};

/// Builds K[x]/(modulus); the modulus must be monic irreducible. Rejection of
/// a reducible modulus names a witness factor when the search is feasible.
FieldPtr build_extension(const FieldPtr& base, const Poly& modulus);

/// GF(p^n) over the prime field with the lex-first modulus; n = 1 gives F_p.
FieldPtr make_field(std::uint64_t p, unsigned n);

struct AxiomReport {
    bool pass = false;
    bool exhaustive = false;
    std::uint64_t checked_pairs = 0;
    std::uint64_t checked_triples = 0;
    std::string failure;
};

/// Field-axiom verification: identities, commutativity, inverses over pairs,
/// associativity and distributivity over triples. Exhaustive when
/// q <= exhaustive_limit, otherwise seeded random sampling.
AxiomReport verify_field_axioms(const FieldPtr& k, std::uint64_t exhaustive_limit = 512,
                                std::uint64_t seed = 0);

struct FrobeniusReport {
    bool pass = false;
    std::uint64_t fixed_points = 0;  // of a -> a^p, p the characteristic
    std::string failure;
};

/// Checks (a+b)^p = a^p + b^p for all pairs, a^q = a for all a, and that the
/// p-power map fixes exactly the prime-subfield image.
FrobeniusReport frobenius_check(const FieldPtr& k);

}  // namespace ffnt
