#pragma once

// Truncated formal power series with exact integer coefficients. The zeta
// function of K[x] lives here with t = q^(-s): the geometric-series form has
// coefficient q^n at t^n, the Euler product runs over irreducible counts,
// and n*[t^n] log S is computed integrally so no rationals ever appear.

#include <vector>

#include "ffnt/irreducible.hpp"

namespace ffnt {

class TruncatedSeries {
public:
    /// coeffs holds c_0..c_T; its length fixes the truncation order.
    explicit TruncatedSeries(std::vector<Nat> coeffs);

    static TruncatedSeries one(std::size_t trunc);

    std::size_t trunc() const { return c_.size() - 1; }
    const Nat& coeff(std::size_t i) const { return c_[i]; }
    const std::vector<Nat>& coeffs() const { return c_; }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

private:
    std::vector<Nat> c_;
};

/// Zeta series of K[x]: coefficient q^n at t^n (monic count by degree).
TruncatedSeries zeta_series(const Nat& q, std::size_t trunc);

/// prod_{d<=T} (1 - t^d)^(-pi(d)) truncated at T; each factor expands by
/// the negative binomial series, so every coefficient is an exact integer.
TruncatedSeries euler_product(const IrreducibleCensus& census, std::size_t trunc);

/// c_1..c_T with c_n = n * [t^n] log S, via the integer recurrence
/// c_n = n*s_n - sum_{j=1}^{n-1} c_j * s_{n-j}. Requires s_0 = 1.
std::vector<Nat> log_derivative_coeffs(const TruncatedSeries& s);

}  // namespace ffnt
