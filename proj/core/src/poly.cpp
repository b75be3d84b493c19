#include "ffnt/poly.hpp"

#include <sstream>

namespace ffnt {

Poly::Poly(FieldPtr k, std::vector<Elem> coeffs) : k_(std::move(k)), c_(std::move(coeffs)) {
    for (Elem c : c_) {
        if (c >= k_->size()) throw std::invalid_argument("Poly: coefficient index out of range");
    }
    normalize();
}

void Poly::normalize() {
    while (!c_.empty() && c_.back() == Field::zero) c_.pop_back();
}

std::size_t Poly::degree() const {
    if (is_zero()) throw std::logic_error("Poly: degree of the zero polynomial");
    return c_.size() - 1;
}

Elem Poly::leading() const {
    if (is_zero()) throw std::logic_error("Poly: leading coefficient of the zero polynomial");
    return c_.back();
}

Poly Poly::monic_scaled() const {
    return scaled(k_->inv(leading()));
}

void Poly::check_same_field(const Poly& f, const Poly& g) {
    if (!same_field(*f.k_, *g.k_))
        throw std::invalid_argument("Poly: operands over different coefficient fields");
}

Poly operator+(const Poly& f, const Poly& g) {
    Poly::check_same_field(f, g);
    const Field& k = *f.k_;
    std::vector<Elem> c(std::max(f.c_.size(), g.c_.size()), Field::zero);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = k.add(f.coeff(i), g.coeff(i));
    Poly r(f.k_);
    r.c_ = std::move(c);
    r.normalize();
    return r;
}

Poly operator-(const Poly& f, const Poly& g) {
    Poly::check_same_field(f, g);
    const Field& k = *f.k_;
    std::vector<Elem> c(std::max(f.c_.size(), g.c_.size()), Field::zero);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = k.sub(f.coeff(i), g.coeff(i));
    Poly r(f.k_);
    r.c_ = std::move(c);
    r.normalize();
    return r;
}

Poly operator*(const Poly& f, const Poly& g) {
    Poly::check_same_field(f, g);
    if (f.is_zero() || g.is_zero()) return Poly::zero(f.k_);
    const Field& k = *f.k_;
    std::vector<Elem> c(f.c_.size() + g.c_.size() - 1, Field::zero);
    for (std::size_t i = 0; i < f.c_.size(); ++i) {
        if (f.c_[i] == Field::zero) continue;
        for (std::size_t j = 0; j < g.c_.size(); ++j) {
            c[i + j] = k.add(c[i + j], k.mul(f.c_[i], g.c_[j]));
        }
    }
    Poly r(f.k_);
    r.c_ = std::move(c);
    r.normalize();
    return r;
}

Poly Poly::operator-() const {
    Poly r(k_);
    r.c_.reserve(c_.size());
    for (Elem c : c_) r.c_.push_back(k_->neg(c));
    return r;
}

Poly Poly::scaled(Elem s) const {
    if (s >= k_->size()) throw std::invalid_argument("Poly: scalar out of range");
    Poly r(k_);
    if (s == Field::zero) return r;
    r.c_.reserve(c_.size());
    for (Elem c : c_) r.c_.push_back(k_->mul(c, s));
    r.normalize();
    return r;
}

bool operator==(const Poly& f, const Poly& g) {
    Poly::check_same_field(f, g);
    return f.c_ == g.c_;
}

std::pair<Poly, Poly> poly_divmod(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw std::domain_error("poly_divmod: division by the zero polynomial");
    const FieldPtr& kp = f.field();
    const Field& k = *kp;
    if (!same_field(k, *g.field()))
        throw std::invalid_argument("poly_divmod: operands over different coefficient fields");
    if (f.is_zero() || f.degree() < g.degree()) return {Poly::zero(kp), f};

    std::vector<Elem> rem(f.coeffs());
    std::size_t dg = g.degree();
    std::vector<Elem> quot(f.degree() - dg + 1, Field::zero);
    Elem lead_inv = k.inv(g.leading());
    for (std::size_t i = rem.size(); i-- > dg;) {
        if (rem[i] == Field::zero) continue;
        Elem q = k.mul(rem[i], lead_inv);
        quot[i - dg] = q;
        for (std::size_t j = 0; j <= dg; ++j) {
            rem[i - dg + j] = k.sub(rem[i - dg + j], k.mul(q, g.coeff(j)));
        }
    }
    return {Poly(kp, std::move(quot)), Poly(kp, std::move(rem))};
}

bool poly_divides(const Poly& g, const Poly& f) {
    return poly_divmod(f, g).second.is_zero();
}

Poly poly_gcd(const Poly& f, const Poly& g) {
    if (f.is_zero() && g.is_zero()) throw std::invalid_argument("poly_gcd: gcd(0, 0)");
    Poly a = f, b = g;
    while (!b.is_zero()) {
        Poly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic_scaled();
}

Poly poly_powmod(const Poly& base, const Nat& e, const Poly& modulus) {
    if (modulus.is_zero() || modulus.degree() == 0)
        throw std::invalid_argument("poly_powmod: modulus must be nonconstant");
    Poly result = Poly::one(base.field());
    if (e == 0) return result;
    Poly b = poly_divmod(base, modulus).second;
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) result = poly_divmod(result * b, modulus).second;
        if (i + 1 < bits) b = poly_divmod(b * b, modulus).second;
    }
    return result;
}

Poly poly_modinv(const Poly& a, const Poly& modulus) {
    // extended Euclid: t*a + s*modulus = gcd
    Poly t = Poly::zero(a.field()), new_t = Poly::one(a.field());
    Poly r = modulus, new_r = poly_divmod(a, modulus).second;
    while (!new_r.is_zero()) {
        auto [q, rem] = poly_divmod(r, new_r);
        Poly next_t = t - q * new_t;
        t = std::move(new_t);
        new_t = std::move(next_t);
        r = std::move(new_r);
        new_r = std::move(rem);
    }
    if (r.is_zero() || r.degree() != 0)
        throw std::domain_error("poly_modinv: element not invertible modulo modulus");
    return t.scaled(a.field()->inv(r.coeff(0)));
}

Poly monic_by_index(const FieldPtr& k, std::size_t d, const Nat& index) {
    Nat q = Nat(static_cast<unsigned long>(k->size()));
    if (index < 0 || index >= nat_pow(q, d))
        throw std::invalid_argument("monic_by_index: index out of range");
    std::vector<Elem> c(d + 1, Field::zero);
    Nat rest = index;
    for (std::size_t i = 0; i < d; ++i) {
        Nat digit = rest % q;
        c[i] = digit.get_ui();
        rest /= q;
    }
    c[d] = Field::one;
    return Poly(k, std::move(c));
}

Nat index_of_monic(const Poly& f) {
    if (!f.is_monic()) throw std::invalid_argument("index_of_monic: polynomial must be monic");
    Nat q = Nat(static_cast<unsigned long>(f.field()->size()));
    Nat idx = 0;
    for (std::size_t i = f.degree(); i-- > 0;) {
        idx = idx * q + static_cast<unsigned long>(f.coeff(i));
    }
    return idx;
}

std::vector<Poly> enumerate_monic(const FieldPtr& k, std::size_t d) {
    Nat count = nat_pow(Nat(static_cast<unsigned long>(k->size())), d);
    if (!count.fits_ulong_p()) throw std::invalid_argument("enumerate_monic: q^d too large to list");
    std::vector<Poly> out;
    out.reserve(count.get_ui());
    for (Nat i = 0; i < count; ++i) out.push_back(monic_by_index(k, d, i));
    return out;
}

std::string to_string(const Poly& f) {
    if (f.is_zero()) return "0";
    const Field& k = *f.field();
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = f.degree() + 1; i-- > 0;) {
        Elem c = f.coeff(i);
        if (c == Field::zero) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << k.elem_to_string(c);
            continue;
        }
        if (c != Field::one) os << "(" << k.elem_to_string(c) << ")*";
        os << "x";
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

std::string to_index_form(const Poly& f) {
    if (!f.is_monic()) throw std::invalid_argument("to_index_form: polynomial must be monic");
    std::uint64_t q = f.field()->size();
    std::size_t d = f.degree();
    std::ostringstream os;
    os << d << ":";
    for (std::size_t i = d; i-- > 0;) {
        os << f.coeff(i);
        if (q > 10 && i > 0) os << ".";
    }
    return os.str();
}

}  // namespace ffnt
