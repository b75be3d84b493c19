#include "ffnt/field.hpp"

namespace ffnt {

Elem Field::pow(Elem a, const Nat& e) const {
    if (e == 0) return one;
    Elem result = one;
    Elem base = a;
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) result = mul(result, base);
        if (i + 1 < bits) base = mul(base, base);
    }
    return result;
}

std::vector<Elem> enumerate_elements(const Field& k) {
    std::vector<Elem> out(k.size());
    for (std::uint64_t i = 0; i < k.size(); ++i) out[i] = i;
    return out;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p >= (1ull << 31)) throw std::invalid_argument("PrimeField: p out of supported range");
    if (!is_prime_u64(p)) throw std::invalid_argument("PrimeField: p must be prime");
}

Elem PrimeField::inv(Elem a) const {
    if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return static_cast<Elem>(t);
}

std::string PrimeField::spec() const { return "F" + std::to_string(p_); }

std::string PrimeField::elem_to_string(Elem a) const { return std::to_string(a); }

std::vector<std::string> PrimeField::tower_description() const {
    return {std::to_string(p_)};
}

FieldPtr make_prime_field(std::uint64_t p) { return std::make_shared<PrimeField>(p); }

}  // namespace ffnt
