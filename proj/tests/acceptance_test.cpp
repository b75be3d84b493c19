// Acceptance suite: one line per criterion, exact checks only.
// Exit status is nonzero if any criterion fails.

#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "ffnt/bertrand.hpp"
#include "ffnt/extension.hpp"
#include "ffnt/identity.hpp"
#include "ffnt/series.hpp"

using namespace ffnt;

namespace {

int failures = 0;

void criterion(const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (") + e.what() + ")";
    }
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << note << "\n" << std::flush;
    if (!ok) ++failures;
}

struct GridPoint {
    std::uint64_t p;
    unsigned tower;  // 1 = prime field
    unsigned n_max;
};

const std::vector<GridPoint> kIdentityGrid = {
    {2, 1, 6}, {3, 1, 4}, {5, 1, 3}, {2, 2, 3}  // last entry is GF(4)
};

bool identity_suite() {
    for (const auto& gp : kIdentityGrid) {
        auto k = make_field(gp.p, gp.tower);
        Nat q(static_cast<unsigned long>(k->size()));
        for (unsigned n = 1; n <= gp.n_max; ++n) {
            auto rep = verify_identity(k, n);
            if (!rep.identity_holds) return false;
            if (rep.lhs_degree != nat_pow(q, n)) return false;
            if (rep.rhs_degree != rep.lhs_degree) return false;
        }
    }
    return true;
}

bool valuation_suite() {
    for (const auto& gp : kIdentityGrid) {
        auto k = make_field(gp.p, gp.tower);
        Nat q(static_cast<unsigned long>(k->size()));
        for (unsigned n = 1; n <= gp.n_max; ++n) {
            Poly fn = big_product_F(k, n);
            auto census = IrreducibleCensus::build(k, n);
            for (std::size_t d = 1; d <= n; ++d) {
                for (const Poly& p : census.list(d)) {
                    if (valuation_direct(p, fn) !=
                        valuation_formula(static_cast<unsigned>(d), n, q))
                        return false;
                }
            }
        }
    }
    return true;
}

bool gauss_suite() {
    for (unsigned long q : {2, 3, 4, 5, 7, 8, 9}) {
        auto census = IrreducibleCensus::from_moebius(q, 12);
        for (unsigned n = 1; n <= 12; ++n) {
            if (!verify_gauss(q, n, census).pass) return false;
        }
    }
    // enumeration agrees with the formula
    for (auto [q, n_max] : std::array<std::pair<unsigned long, unsigned>, 2>{{{2, 10}, {3, 6}}}) {
        auto k = make_prime_field(q);
        auto census = IrreducibleCensus::build(k, n_max);
        for (unsigned n = 1; n <= n_max; ++n) {
            if (census.count(n) != count_moebius(q, n)) return false;
        }
    }
    return true;
}

bool zeta_suite() {
    for (unsigned long q : {2, 3, 5}) {
        auto census = IrreducibleCensus::from_moebius(q, 12);
        if (!(euler_product(census, 12) == zeta_series(q, 12))) return false;
        auto logd = log_derivative_coeffs(zeta_series(q, 12));
        for (unsigned n = 1; n <= 12; ++n) {
            if (logd[n - 1] != nat_pow(q, n)) return false;
        }
    }
    return true;
}

bool existence_suite() {
    for (unsigned long q = 2; q <= 16; ++q) {
        if (factorize(q).factors.size() != 1) continue;  // prime powers only
        for (unsigned n = 1; n <= 64; ++n) {
            if (count_moebius(q, n) < 1) return false;
        }
        if (q >= 2) {
            for (unsigned n = 2; n <= 64; ++n) {
                if (!verify_degree_bound(q, n)) return false;
            }
        }
    }
    for (std::uint64_t p : {2, 3, 5, 7}) {
        auto k = make_prime_field(p);
        Nat size(static_cast<unsigned long>(p));
        for (unsigned n = 1; nat_pow(size, n) <= 65536; ++n) {
            Poly f = find_irreducible(k, n);
            if (!is_irreducible_fast(f)) return false;
        }
    }
    return true;
}

bool field_construction_suite() {
    for (std::uint64_t p : {2, 3, 5, 7}) {
        for (unsigned n = 1;; ++n) {
            Nat size = nat_pow(Nat(static_cast<unsigned long>(p)), n);
            if (size > 512) break;
            auto k = make_field(p, n);
            auto ax = verify_field_axioms(k, 512);
            if (!ax.pass || !ax.exhaustive) return false;
            auto fr = frobenius_check(k);
            if (!fr.pass || fr.fixed_points != p) return false;
            for (Elem a = 1; a < k->size(); ++a) {
                if (k->mul(a, k->inv(a)) != 1) return false;
            }
        }
    }
    return true;
}

bool bertrand_suite() {
    // valuations match the factorization for N <= 30
    for (unsigned long n = 1; n <= 30; ++n) {
        auto f = factorize(central_binomial(n));
        for (const auto& [p, e] : f.factors) {
            if (vp_central_binomial(n, p) != e) return false;
        }
        Nat product = 1;
        for (unsigned long p = 2; p <= 2 * n; ++p) {
            if (!is_prime_u64(p)) continue;
            Nat v = vp_central_binomial(n, p);
            Nat pv;
            mpz_pow_ui(pv.get_mpz_t(), Nat(p).get_mpz_t(), v.get_ui());
            product *= pv;
        }
        if (product != central_binomial(n)) return false;
    }
    // p^(v_p) <= 2N for N <= 1000
    auto sieve = prime_sieve(2000);
    for (unsigned long n = 1; n <= 1000; ++n) {
        for (unsigned long p = 2; p <= 2 * n; ++p) {
            if (sieve[p] && !check_prime_power_bound(n, p)) return false;
        }
    }
    // size bounds for N <= 60
    for (unsigned long n = 1; n <= 60; ++n) {
        if (!central_binomial_bounds(n).pass()) return false;
    }
    // full scan
    std::vector<PostulateCertificate> certs;
    auto s = scan_postulate(100000, 1, &certs);
    if (!s.pass || s.certificates != 99999) return false;
    for (const auto& c : certs) {
        if (!(c.n < c.witness && c.witness <= 2 * c.n && is_prime_u64(c.witness))) return false;
    }
    return true;
}

#ifdef FFNT_CLI_PATH
std::pair<int, std::string> run_cli(const std::string& args) {
    std::string cmd = std::string(FFNT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    return {WEXITSTATUS(pclose(pipe)), out};
}

bool determinism_suite() {
    const std::vector<std::string> invocations = {
        "verify identity --q 2 --n-max 4 --no-timestamp --seed 0",
        "irreducible count --q 2 --degree-max 10 --no-timestamp",
        "field construct --p 2 --n 6 --no-timestamp --seed 0",
    };
    for (const auto& inv : invocations) {
        auto a = run_cli(inv);
        auto b = run_cli(inv);
        if (a.first != 0 || a != b) return false;
    }
    auto j1 = run_cli("bertrand scan --max 50000 --jobs 1 --no-timestamp");
    auto j3 = run_cli("bertrand scan --max 50000 --jobs 3 --no-timestamp");
    auto j8 = run_cli("bertrand scan --max 50000 --jobs 8 --no-timestamp");
    return j1.first == 0 && j1 == j3 && j1 == j8;
}
#endif

}  // namespace

int main() {
    criterion("product identity: F(n)/F(n-1)^q = prod irreducibles = x^(q^n)-x on the grid",
              identity_suite);
    criterion("valuation formula matches repeated division on the grid", valuation_suite);
    criterion("Gauss relation q^n = sum d*pi(d), formula and enumeration", gauss_suite);
    criterion("zeta: Euler product = geometric series; log-derivative = q^n", zeta_suite);
    criterion("existence: pi(q,n) >= 1, lex search succeeds, degree bound holds",
              existence_suite);
    criterion("field construction: axioms, inverses, Frobenius for all GF(p^n) <= 512",
              field_construction_suite);
    criterion("Bertrand: valuations, p^v <= 2N, 4^N/(2N+1) <= C <= 4^N, scan to 10^5",
              bertrand_suite);
#ifdef FFNT_CLI_PATH
    criterion("determinism: byte-identical CLI reports across runs and job counts",
              determinism_suite);
#endif
    return failures == 0 ? 0 : 1;
}
