#pragma once

// Coefficient-field abstraction. Every field exposes its elements through a
// canonical index in [0, q): 0 is the additive identity, 1 the multiplicative
// identity, and the index order defines the polynomial enumeration order used
// everywhere else. Prime fields F_p live here; extension fields implement the
// same interface in extension.hpp.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "ffnt/arith.hpp"

namespace ffnt {

using Elem = std::uint64_t;

class Field {
public:
    virtual ~Field() = default;

    virtual std::uint64_t size() const = 0;
    virtual std::uint64_t characteristic() const = 0;

    virtual Elem add(Elem a, Elem b) const = 0;
    virtual Elem sub(Elem a, Elem b) const = 0;
    virtual Elem mul(Elem a, Elem b) const = 0;
    virtual Elem neg(Elem a) const = 0;
    /// Multiplicative inverse; throws std::domain_error on zero.
    virtual Elem inv(Elem a) const = 0;

    static constexpr Elem zero = 0;
    static constexpr Elem one = 1;

    Elem pow(Elem a, const Nat& e) const;

    /// Structural identity string; two Field objects describe the same field
    /// iff their spec strings are equal.
    virtual std::string spec() const = 0;

    virtual std::string elem_to_string(Elem a) const = 0;

    /// Characteristic p plus, for each extension level from the bottom up,
    /// the modulus in compact index form.
    virtual std::vector<std::string> tower_description() const = 0;
};

using FieldPtr = std::shared_ptr<const Field>;

inline bool same_field(const Field& a, const Field& b) {
    return &a == &b || a.spec() == b.spec();
}

/// All q elements in canonical index order 0, 1, ..., q-1.
std::vector<Elem> enumerate_elements(const Field& k);

class PrimeField final : public Field {
public:
    explicit PrimeField(std::uint64_t p);

    std::uint64_t size() const override { return p_; }
    std::uint64_t characteristic() const override { return p_; }

    Elem add(Elem a, Elem b) const override { return (a + b) % p_; }
    Elem sub(Elem a, Elem b) const override { return (a + p_ - b) % p_; }
    Elem mul(Elem a, Elem b) const override { return (a * b) % p_; }
    Elem neg(Elem a) const override { return a == 0 ? 0 : p_ - a; }
    Elem inv(Elem a) const override;

    std::string spec() const override;
    std::string elem_to_string(Elem a) const override;
    std::vector<std::string> tower_description() const override;

private:
    std::uint64_t p_;
};

FieldPtr make_prime_field(std::uint64_t p);

/// Checked element value: carries its field and rejects mixed-field operands.
struct FieldElem {
    FieldPtr field;
    Elem v = 0;

    FieldElem() = default;
    FieldElem(FieldPtr f, Elem value) : field(std::move(f)), v(value) {
        if (v >= field->size()) throw std::invalid_argument("FieldElem: index out of range");
    }

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b) {
        check_same(a, b);
        return {a.field, a.field->add(a.v, b.v)};
    }
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b) {
        check_same(a, b);
        return {a.field, a.field->sub(a.v, b.v)};
    }
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b) {
        check_same(a, b);
        return {a.field, a.field->mul(a.v, b.v)};
    }
    FieldElem operator-() const { return {field, field->neg(v)}; }
    FieldElem inverse() const { return {field, field->inv(v)}; }
    FieldElem pow(const Nat& e) const { return {field, field->pow(v, e)}; }

    friend bool operator==(const FieldElem& a, const FieldElem& b) {
        check_same(a, b);
        return a.v == b.v;
    }

private:
    static void check_same(const FieldElem& a, const FieldElem& b) {
        if (!same_field(*a.field, *b.field))
            throw std::invalid_argument("FieldElem: operands from different fields");
    }
};

}  // namespace ffnt
