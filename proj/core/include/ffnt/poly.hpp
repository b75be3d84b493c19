#pragma once

// Dense univariate polynomials over an abstract coefficient field, little
// endian by degree. The zero polynomial stores no coefficients; its degree is
// a sentinel condition (is_zero), never an integer that flows into formulas.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ffnt/field.hpp"

namespace ffnt {

class Poly {
public:
    explicit Poly(FieldPtr k) : k_(std::move(k)) {}
    Poly(FieldPtr k, std::vector<Elem> coeffs);

    static Poly zero(FieldPtr k) { return Poly(std::move(k)); }
    static Poly one(FieldPtr k) { return Poly(std::move(k), {Field::one}); }
    static Poly x(FieldPtr k) { return Poly(std::move(k), {Field::zero, Field::one}); }
    static Poly constant(FieldPtr k, Elem c) { return Poly(std::move(k), {c}); }

    const FieldPtr& field() const { return k_; }
    bool is_zero() const { return c_.empty(); }

    /// Degree of a nonzero polynomial; throws std::logic_error on zero.
    std::size_t degree() const;

    /// Coefficient of x^i (zero beyond the stored length).
    Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Field::zero; }
    Elem leading() const;
    bool is_monic() const { return !is_zero() && leading() == Field::one; }

    /// Scales by the inverse of the leading coefficient.
    Poly monic_scaled() const;

    const std::vector<Elem>& coeffs() const { return c_; }

    friend Poly operator+(const Poly& f, const Poly& g);
    friend Poly operator-(const Poly& f, const Poly& g);
    friend Poly operator*(const Poly& f, const Poly& g);
    Poly operator-() const;
    Poly scaled(Elem c) const;

    friend bool operator==(const Poly& f, const Poly& g);

private:
    void normalize();
    static void check_same_field(const Poly& f, const Poly& g);

    FieldPtr k_;
    std::vector<Elem> c_;
};

/// Division algorithm: f = q*g + r with r = 0 or deg r < deg g.
/// Throws std::domain_error when g is zero.
std::pair<Poly, Poly> poly_divmod(const Poly& f, const Poly& g);

/// True iff g divides f exactly.
bool poly_divides(const Poly& g, const Poly& f);

/// Monic gcd; gcd(0, 0) is rejected.
Poly poly_gcd(const Poly& f, const Poly& g);

/// base^e mod modulus by square-and-multiply; modulus must be nonconstant.
Poly poly_powmod(const Poly& base, const Nat& e, const Poly& modulus);

/// Inverse of a modulo modulus (extended Euclid); requires gcd(a, modulus) = 1.
Poly poly_modinv(const Poly& a, const Poly& modulus);

/// Monic polynomial of degree d whose lower coefficients are the base-q
/// digits of index (a_0 least significant). index must lie in [0, q^d).
Poly monic_by_index(const FieldPtr& k, std::size_t d, const Nat& index);

/// Inverse of monic_by_index.
Nat index_of_monic(const Poly& f);

/// All q^d monic polynomials of degree d in canonical index order.
std::vector<Poly> enumerate_monic(const FieldPtr& k, std::size_t d);

/// Human-readable descending-degree form, e.g. "x^3 + x + 1".
std::string to_string(const Poly& f);

/// Compact form "<degree>:<digits>" with the lower coefficients as base-q
/// digits, highest power first (dot-separated when q > 10).
std::string to_index_form(const Poly& f);

}  // namespace ffnt
