#include "ffnt/extension.hpp"

#include <random>
#include <sstream>

#include "ffnt/irreducible.hpp"

namespace ffnt {

Poly find_irreducible(const FieldPtr& k, unsigned n, const SearchStrategy& strategy) {
    if (n < 1) throw std::invalid_argument("find_irreducible: n must be >= 1");
    Nat q(static_cast<unsigned long>(k->size()));
    Nat space = nat_pow(q, n);

    if (strategy.mode == SearchStrategy::Mode::kRandom && space.fits_ulong_p()) {
        std::mt19937_64 rng(strategy.seed);
        std::uniform_int_distribution<std::uint64_t> dist(0, space.get_ui() - 1);
        for (int attempt = 0; attempt < 4096; ++attempt) {
            Poly f = monic_by_index(k, n, Nat(static_cast<unsigned long>(dist(rng))));
            if (is_irreducible_fast(f)) return f;
        }
        // fall through to the deterministic scan
    }
    for (Nat i = 0; i < space; ++i) {
        Poly f = monic_by_index(k, n, i);
        if (is_irreducible_fast(f)) return f;
    }
    // Unreachable: existence of a degree-n irreducible is a theorem.
    throw std::logic_error("find_irreducible: enumeration exhausted without an irreducible");
}

ExtensionField::ExtensionField(FieldPtr base, Poly modulus)
    : base_(std::move(base)), modulus_(std::move(modulus)) {
    if (!same_field(*base_, *modulus_.field()))
        throw std::invalid_argument("ExtensionField: modulus not over the base field");
    if (modulus_.is_zero() || modulus_.degree() < 1 || !modulus_.is_monic())
        throw std::invalid_argument("ExtensionField: modulus must be monic of degree >= 1");
    if (!is_irreducible_fast(modulus_)) {
        std::string msg = "ExtensionField: modulus is reducible";
        // name a witness factor when the search space is small
        std::size_t n = modulus_.degree();
        Nat half_space = nat_pow(Nat(static_cast<unsigned long>(base_->size())), n / 2);
        if (half_space <= 65536) {
            for (std::size_t d = 1; d <= n / 2; ++d) {
                for (const Poly& g : enumerate_monic(base_, d)) {
                    if (poly_divides(g, modulus_)) {
                        msg += "; witness factor " + to_string(g);
                        throw std::invalid_argument(msg);
                    }
                }
            }
        }
        throw std::invalid_argument(msg);
    }
    n_ = static_cast<unsigned>(modulus_.degree());
    Nat q = nat_pow(Nat(static_cast<unsigned long>(base_->size())), n_);
    if (q > (Nat(1) << 32))
        throw std::invalid_argument("ExtensionField: field size out of supported range");
    q_ = q.get_ui();
    if (q_ <= kTableLimit) build_tables();
}

Poly ExtensionField::decode(Elem a) const {
    std::uint64_t q0 = base_->size();
    std::vector<Elem> c(n_, Field::zero);
    for (unsigned i = 0; i < n_; ++i) {
        c[i] = a % q0;
        a /= q0;
    }
    return Poly(base_, std::move(c));
}

Elem ExtensionField::encode(const Poly& residue) const {
    std::uint64_t q0 = base_->size();
    Elem a = 0;
    for (unsigned i = n_; i-- > 0;) a = a * q0 + residue.coeff(i);
    return a;
}

Elem ExtensionField::add_slow(Elem a, Elem b) const {
    std::uint64_t q0 = base_->size();
    Elem r = 0, mult = 1;
    for (unsigned i = 0; i < n_; ++i) {
        r += base_->add(a % q0, b % q0) * mult;
        a /= q0;
        b /= q0;
        mult *= q0;
    }
    return r;
}

Elem ExtensionField::mul_slow(Elem a, Elem b) const {
    Poly prod = decode(a) * decode(b);
    return encode(poly_divmod(prod, modulus_).second);
}

void ExtensionField::build_tables() {
    add_table_.resize(q_ * q_);
    mul_table_.resize(q_ * q_);
    neg_table_.resize(q_);
    inv_table_.assign(q_, 0);
    for (Elem a = 0; a < q_; ++a) {
        for (Elem b = 0; b < q_; ++b) {
            add_table_[a * q_ + b] = static_cast<std::uint16_t>(add_slow(a, b));
            mul_table_[a * q_ + b] = static_cast<std::uint16_t>(mul_slow(a, b));
        }
    }
    for (Elem a = 0; a < q_; ++a) {
        neg_table_[a] = static_cast<std::uint16_t>(encode(-decode(a)));
        if (a != 0)
            inv_table_[a] = static_cast<std::uint16_t>(encode(poly_modinv(decode(a), modulus_)));
    }
}

Elem ExtensionField::add(Elem a, Elem b) const {
    return add_table_.empty() ? add_slow(a, b) : add_table_[a * q_ + b];
}

Elem ExtensionField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem ExtensionField::mul(Elem a, Elem b) const {
    return mul_table_.empty() ? mul_slow(a, b) : mul_table_[a * q_ + b];
}

Elem ExtensionField::neg(Elem a) const {
    return neg_table_.empty() ? encode(-decode(a)) : neg_table_[a];
}

Elem ExtensionField::inv(Elem a) const {
    if (a == 0) throw std::domain_error("ExtensionField: inverse of zero");
    return inv_table_.empty() ? encode(poly_modinv(decode(a), modulus_)) : inv_table_[a];
}

std::string ExtensionField::spec() const {
    return base_->spec() + "[x]/(" + to_index_form(modulus_) + ")";
}

std::string ExtensionField::elem_to_string(Elem a) const {
    return to_string(decode(a));
}

std::vector<std::string> ExtensionField::tower_description() const {
    auto desc = base_->tower_description();
    desc.push_back(to_index_form(modulus_));
    return desc;
}

FieldPtr build_extension(const FieldPtr& base, const Poly& modulus) {
    return std::make_shared<ExtensionField>(base, modulus);
}

FieldPtr make_field(std::uint64_t p, unsigned n) {
    FieldPtr fp = make_prime_field(p);
    if (n <= 1) return fp;
    return build_extension(fp, find_irreducible(fp, n));
}

namespace {

std::uint64_t base_subfield_size(const Field& k) {
    if (auto* ext = dynamic_cast<const ExtensionField*>(&k)) return ext->base()->size();
    return k.characteristic();
}

}  // namespace

AxiomReport verify_field_axioms(const FieldPtr& k, std::uint64_t exhaustive_limit,
                                std::uint64_t seed) {
    AxiomReport rep;
    std::uint64_t q = k->size();

    auto fail = [&rep](std::string msg) {
        rep.failure = std::move(msg);
        return rep;
    };

    if (q <= exhaustive_limit) {
        rep.exhaustive = true;
        // local op matrices so the triple loops avoid dispatch
        std::vector<std::uint32_t> A(q * q), M(q * q);
        for (Elem a = 0; a < q; ++a) {
            for (Elem b = 0; b < q; ++b) {
                A[a * q + b] = static_cast<std::uint32_t>(k->add(a, b));
                M[a * q + b] = static_cast<std::uint32_t>(k->mul(a, b));
            }
        }
        for (Elem a = 0; a < q; ++a) {
            if (A[a * q] != a) return fail("a + 0 != a");
            if (M[a * q + 1] != a) return fail("a * 1 != a");
            if (A[a * q + k->neg(a)] != 0) return fail("a + (-a) != 0");
            if (a != 0 && M[a * q + k->inv(a)] != 1) return fail("a * inv(a) != 1");
        }
        for (Elem a = 0; a < q; ++a) {
            for (Elem b = 0; b < q; ++b) {
                ++rep.checked_pairs;
                if (A[a * q + b] != A[b * q + a]) return fail("addition not commutative");
                if (M[a * q + b] != M[b * q + a]) return fail("multiplication not commutative");
            }
        }
        for (Elem a = 0; a < q; ++a) {
            for (Elem b = 0; b < q; ++b) {
                std::uint32_t ab_add = A[a * q + b];
                std::uint32_t ab_mul = M[a * q + b];
                for (Elem c = 0; c < q; ++c) {
                    ++rep.checked_triples;
                    if (A[ab_add * q + c] != A[a * q + A[b * q + c]])
                        return fail("addition not associative");
                    if (M[ab_mul * q + c] != M[a * q + M[b * q + c]])
                        return fail("multiplication not associative");
                    if (M[a * q + A[b * q + c]] != A[ab_mul * q + M[a * q + c]])
                        return fail("multiplication does not distribute");
                }
            }
        }
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::uint64_t> dist(0, q - 1);
        const std::uint64_t samples = 20000;
        for (std::uint64_t i = 0; i < samples; ++i) {
            Elem a = dist(rng), b = dist(rng), c = dist(rng);
            ++rep.checked_triples;
            if (k->add(k->add(a, b), c) != k->add(a, k->add(b, c)))
                return fail("addition not associative");
            if (k->mul(k->mul(a, b), c) != k->mul(a, k->mul(b, c)))
                return fail("multiplication not associative");
            if (k->mul(a, k->add(b, c)) != k->add(k->mul(a, b), k->mul(a, c)))
                return fail("multiplication does not distribute");
            if (k->add(a, b) != k->add(b, a)) return fail("addition not commutative");
            if (k->mul(a, b) != k->mul(b, a)) return fail("multiplication not commutative");
            ++rep.checked_pairs;
            if (a != 0 && k->mul(a, k->inv(a)) != 1) return fail("a * inv(a) != 1");
            if (k->add(a, k->neg(a)) != 0) return fail("a + (-a) != 0");
        }
    }
    rep.pass = true;
    return rep;
}

FrobeniusReport frobenius_check(const FieldPtr& k) {
    FrobeniusReport rep;
    std::uint64_t q = k->size();
    std::uint64_t q0 = base_subfield_size(*k);
    Nat q0n(static_cast<unsigned long>(q0));
    Nat qn(static_cast<unsigned long>(q));

    std::vector<Elem> frob(q);
    for (Elem a = 0; a < q; ++a) frob[a] = k->pow(a, q0n);

    auto fail = [&rep](std::string msg) {
        rep.failure = std::move(msg);
        return rep;
    };

    for (Elem a = 0; a < q; ++a) {
        for (Elem b = 0; b < q; ++b) {
            if (frob[k->add(a, b)] != k->add(frob[a], frob[b]))
                return fail("(a+b)^q0 != a^q0 + b^q0");
        }
    }
    for (Elem a = 0; a < q; ++a) {
        if (k->pow(a, qn) != a) return fail("a^q != a");
        if (frob[a] == a) {
            ++rep.fixed_points;
            if (a >= q0) return fail("p-power map fixes an element outside the base image");
        } else if (a < q0) {
            return fail("p-power map moves a base-field element");
        }
    }
    if (rep.fixed_points != q0) return fail("fixed-point count is not the base-field size");
    rep.pass = true;
    return rep;
}

}  // namespace ffnt
