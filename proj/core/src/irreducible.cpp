#include "ffnt/irreducible.hpp"

namespace ffnt {

bool is_irreducible_oracle(const Poly& f) {
    if (f.is_zero() || f.degree() == 0)
        throw std::invalid_argument("is_irreducible_oracle: constant input");
    std::size_t n = f.degree();
    for (std::size_t d = 1; d <= n / 2; ++d) {
        for (const Poly& g : enumerate_monic(f.field(), d)) {
            if (poly_divides(g, f)) return false;
        }
    }
    return true;
}

bool is_irreducible_fast(const Poly& f) {
    if (f.is_zero() || f.degree() == 0)
        throw std::invalid_argument("is_irreducible_fast: constant input");
    if (!f.is_monic()) throw std::invalid_argument("is_irreducible_fast: input must be monic");
    std::size_t n = f.degree();
    if (n == 1) return true;

    const FieldPtr& k = f.field();
    Nat q = Nat(static_cast<unsigned long>(k->size()));
    Poly x = Poly::x(k);

    if (!(poly_powmod(x, nat_pow(q, n), f) == poly_divmod(x, f).second)) return false;
    for (const auto& [l, e] : factorize(Nat(static_cast<unsigned long>(n))).factors) {
        unsigned long nl = n / l.get_ui();
        Poly g = poly_gcd(poly_powmod(x, nat_pow(q, nl), f) - x, f);
        if (!(g == Poly::one(k))) return false;
    }
    return true;
}

std::vector<Poly> enumerate_irreducibles(const FieldPtr& k, std::size_t d) {
    if (d == 0) throw std::invalid_argument("enumerate_irreducibles: d must be >= 1");
    std::vector<Poly> out;
    Nat count = nat_pow(Nat(static_cast<unsigned long>(k->size())), d);
    for (Nat i = 0; i < count; ++i) {
        Poly f = monic_by_index(k, d, i);
        if (is_irreducible_fast(f)) out.push_back(std::move(f));
    }
    return out;
}

Nat count_moebius(const Nat& q, unsigned n) {
    if (q < 2) throw std::invalid_argument("count_moebius: q must be >= 2");
    if (n < 1) throw std::invalid_argument("count_moebius: n must be >= 1");
    Nat sum = 0;
    for (const Nat& d : divisors(Nat(static_cast<unsigned long>(n)))) {
        sum += moebius(d) * nat_pow(q, n / d.get_ui());
    }
    if (sum % n != 0)
        throw std::logic_error("count_moebius: divisor sum not divisible by n (arithmetic bug)");
    return sum / n;
}

IrreducibleCensus IrreducibleCensus::build(const FieldPtr& k, std::size_t max_degree,
                                           std::uint64_t list_limit) {
    IrreducibleCensus c;
    c.q_ = Nat(static_cast<unsigned long>(k->size()));
    c.max_degree_ = max_degree;
    for (std::size_t d = 1; d <= max_degree; ++d) {
        Nat space = nat_pow(c.q_, d);
        if (space <= list_limit) {
            auto polys = enumerate_irreducibles(k, d);
            c.counts_[d] = Nat(static_cast<unsigned long>(polys.size()));
            c.lists_[d] = std::move(polys);
        } else {
            c.counts_[d] = count_moebius(c.q_, static_cast<unsigned>(d));
        }
    }
    return c;
}

IrreducibleCensus IrreducibleCensus::from_moebius(const Nat& q, std::size_t max_degree) {
    IrreducibleCensus c;
    c.q_ = q;
    c.max_degree_ = max_degree;
    for (std::size_t d = 1; d <= max_degree; ++d) {
        c.counts_[d] = count_moebius(q, static_cast<unsigned>(d));
    }
    return c;
}

IrreducibleCensus IrreducibleCensus::from_counts(const Nat& q, const std::vector<Nat>& counts) {
    IrreducibleCensus c;
    c.q_ = q;
    c.max_degree_ = counts.size();
    for (std::size_t d = 1; d <= counts.size(); ++d) c.counts_[d] = counts[d - 1];
    return c;
}

const Nat& IrreducibleCensus::count(std::size_t d) const {
    auto it = counts_.find(d);
    if (it == counts_.end()) throw std::out_of_range("IrreducibleCensus: degree not covered");
    return it->second;
}

bool IrreducibleCensus::has_list(std::size_t d) const { return lists_.count(d) > 0; }

const std::vector<Poly>& IrreducibleCensus::list(std::size_t d) const {
    auto it = lists_.find(d);
    if (it == lists_.end())
        throw std::out_of_range("IrreducibleCensus: no polynomial list at this degree");
    return it->second;
}

GaussReport verify_gauss(const Nat& q, unsigned n, const IrreducibleCensus& census) {
    GaussReport r;
    r.q = q;
    r.n = n;
    r.lhs = nat_pow(q, n);
    r.rhs = 0;
    for (const Nat& dn : divisors(Nat(n))) {
        std::size_t d = dn.get_ui();
        if (!census.covers(d)) throw std::invalid_argument("verify_gauss: census incomplete");
        Nat pi = census.count(d);
        Nat term = Nat(static_cast<unsigned long>(d)) * pi;
        r.rhs += term;
        r.terms.push_back({d, pi, term});
    }
    r.pass = (r.lhs == r.rhs);
    return r;
}

}  // namespace ffnt
