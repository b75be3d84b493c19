#include "ffnt/series.hpp"

namespace ffnt {

TruncatedSeries::TruncatedSeries(std::vector<Nat> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("TruncatedSeries: needs at least a constant term");
}

TruncatedSeries TruncatedSeries::one(std::size_t trunc) {
    std::vector<Nat> c(trunc + 1, Nat(0));
    c[0] = 1;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.trunc() != b.trunc())
        throw std::invalid_argument("TruncatedSeries: mismatched truncation orders");
    std::size_t t = a.trunc();
    std::vector<Nat> c(t + 1, Nat(0));
    for (std::size_t i = 0; i <= t; ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; i + j <= t; ++j) {
            c[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries zeta_series(const Nat& q, std::size_t trunc) {
    if (q < 2) throw std::invalid_argument("zeta_series: q must be >= 2");
    std::vector<Nat> c(trunc + 1);
    c[0] = 1;
    for (std::size_t n = 1; n <= trunc; ++n) c[n] = c[n - 1] * q;
    return TruncatedSeries(std::move(c));
}

namespace {

// (1 - t^d)^(-pi): coefficient at t^(k*d) is C(pi + k - 1, k).
TruncatedSeries inverse_factor_power(std::size_t d, const Nat& pi, std::size_t trunc) {
    std::vector<Nat> c(trunc + 1, Nat(0));
    c[0] = 1;
    Nat binom = 1;
    for (std::size_t k = 1; k * d <= trunc; ++k) {
        // C(pi+k-1, k) = C(pi+k-2, k-1) * (pi+k-1) / k
        binom = binom * (pi + static_cast<unsigned long>(k) - 1);
        binom /= static_cast<unsigned long>(k);
        c[k * d] = binom;
    }
    return TruncatedSeries(std::move(c));
}

}  // namespace

TruncatedSeries euler_product(const IrreducibleCensus& census, std::size_t trunc) {
    for (std::size_t d = 1; d <= trunc; ++d) {
        if (!census.covers(d)) throw std::invalid_argument("euler_product: census incomplete");
    }
    TruncatedSeries acc = TruncatedSeries::one(trunc);
    for (std::size_t d = 1; d <= trunc; ++d) {
        const Nat& pi = census.count(d);
        if (pi == 0) continue;
        acc = acc * inverse_factor_power(d, pi, trunc);
    }
    return acc;
}

std::vector<Nat> log_derivative_coeffs(const TruncatedSeries& s) {
    if (s.coeff(0) != 1)
        throw std::invalid_argument("log_derivative_coeffs: constant term must be 1");
    std::size_t t = s.trunc();
    std::vector<Nat> c(t + 1, Nat(0));  // c[0] unused
    for (std::size_t n = 1; n <= t; ++n) {
        Nat v = static_cast<unsigned long>(n) * s.coeff(n);
        for (std::size_t j = 1; j < n; ++j) v -= c[j] * s.coeff(n - j);
        c[n] = std::move(v);
    }
    return std::vector<Nat>(c.begin() + 1, c.end());
}

}  // namespace ffnt
