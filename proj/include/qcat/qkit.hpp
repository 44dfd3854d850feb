#pragma once

/**
 * @file qkit.hpp
 * @brief q-integers, q-shifted factorials, q-binomial coefficients,
 *        cyclotomic polynomials, and the factored-form divisibility calculus.
 *
 * q_binomial is built three independent ways (Pascal recurrence, factorial
 * ratio, cyclotomic product) and the results are compared on every cache
 * miss; a disagreement throws InternalMismatch since it can only mean a bug.
 *
 * FactorForm keeps q-binomials and q-integers as multisets of cyclotomic
 * indices, so gcd/coprimality questions reduce to set intersections instead
 * of polynomial gcds. Cyclotomic polynomials and q-binomials are memoized per
 * process; the caches tolerate concurrent readers and idempotent concurrent
 * writes.
 */

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "qcat/poly.hpp"

namespace qcat {

/// [n] = 1 + q + ... + q^{n-1}; [0] = 0.
inline IntPolynomial q_integer(long n) {
    if (n < 0) throw DomainError("q_integer: negative n");
    return IntPolynomial(std::vector<Int>(static_cast<size_t>(n), Int(1)));
}

/// (q;q)_n = (1-q)(1-q^2)...(1-q^n).
inline IntPolynomial q_factorial(long n) {
    if (n < 0) throw DomainError("q_factorial: negative n");
    IntPolynomial acc = IntPolynomial::constant(1);
    for (long i = 1; i <= n; ++i) {
        IntPolynomial f = IntPolynomial::constant(1) - IntPolynomial::monomial(Int(1), i);
        acc = acc * f;
    }
    return acc;
}

/// (q^m;q)_s = prod_{i=0}^{s-1} (1 - q^{m+i}); the empty product (s = 0) is 1.
/// m may be negative, hence the Laurent result; a factor with m+i = 0 makes it 0.
inline LaurentPolynomial q_pochhammer_power(long m, long s) {
    if (s < 0) throw DomainError("q_pochhammer_power: negative length");
    LaurentPolynomial acc = q_power(0);
    for (long i = 0; i < s; ++i) {
        acc = acc * (q_power(0) - q_power(m + i));
        if (acc.is_zero()) break;
    }
    return acc;
}

inline std::vector<long> divisors(long n) {
    if (n < 1) throw DomainError("divisors: n must be positive");
    std::vector<long> lo, hi;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        lo.push_back(d);
        if (d != n / d) hi.push_back(n / d);
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

/// Moebius mu by trial-division factorization.
inline int mobius(long n) {
    if (n < 1) throw DomainError("mobius: n must be positive");
    int primes = 0;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        ++primes;
    }
    if (n > 1) ++primes;
    return (primes % 2 == 0) ? 1 : -1;
}

namespace detail {

struct QKitCaches {
    std::shared_mutex mutex;
    std::map<long, IntPolynomial> cyclotomic;
    std::map<long, std::shared_ptr<const std::vector<IntPolynomial>>> pascal_rows;
    std::map<std::pair<long, long>, IntPolynomial> qbinomial;
};

inline QKitCaches& qkit_caches() {
    static QKitCaches caches;
    return caches;
}

} // namespace detail

/// Phi_d(q) via Moebius inversion: prod_{e|d} (q^{d/e} - 1)^{mu(e)}.
inline IntPolynomial cyclotomic(long d) {
    if (d < 1) throw DomainError("cyclotomic: index must be positive");
    auto& caches = detail::qkit_caches();
    {
        std::shared_lock lock(caches.mutex);
        auto it = caches.cyclotomic.find(d);
        if (it != caches.cyclotomic.end()) return it->second;
    }
    IntPolynomial num = IntPolynomial::constant(1);
    std::vector<IntPolynomial> dens;
    for (long e : divisors(d)) {
        int mu = mobius(e);
        if (mu == 0) continue;
        IntPolynomial f = IntPolynomial::monomial(Int(1), d / e) - IntPolynomial::constant(1);
        if (mu == 1) num = num * f;
        else dens.push_back(std::move(f));
    }
    for (const IntPolynomial& f : dens) num = poly_exact_div(num, f);
    {
        std::unique_lock lock(caches.mutex);
        caches.cyclotomic.emplace(d, num);
    }
    return num;
}

namespace detail {

/// Row n of the q-Pascal triangle: [n br k] = [n-1 br k-1] + q^k [n-1 br k].
inline std::shared_ptr<const std::vector<IntPolynomial>> pascal_row(long n) {
    auto& caches = qkit_caches();
    {
        std::shared_lock lock(caches.mutex);
        auto it = caches.pascal_rows.find(n);
        if (it != caches.pascal_rows.end()) return it->second;
    }
    std::shared_ptr<const std::vector<IntPolynomial>> prev;
    if (n > 0) prev = pascal_row(n - 1);
    auto row = std::make_shared<std::vector<IntPolynomial>>();
    row->reserve(static_cast<size_t>(n) + 1);
    for (long k = 0; k <= n; ++k) {
        if (k == 0 || k == n) {
            row->push_back(IntPolynomial::constant(1));
            continue;
        }
        IntPolynomial qk = IntPolynomial::monomial(Int(1), k);
        row->push_back((*prev)[static_cast<size_t>(k - 1)] + qk * (*prev)[static_cast<size_t>(k)]);
    }
    std::unique_lock lock(caches.mutex);
    auto [it, inserted] = caches.pascal_rows.emplace(n, row);
    return it->second;
}

inline IntPolynomial q_binomial_ratio(long n, long k) {
    return poly_exact_div(q_factorial(n), q_factorial(k) * q_factorial(n - k));
}

inline IntPolynomial q_binomial_cyclotomic(long n, long k) {
    IntPolynomial acc = IntPolynomial::constant(1);
    for (long d = 2; d <= n; ++d) {
        if (k / d + (n - k) / d < n / d) acc = acc * cyclotomic(d);
    }
    return acc;
}

} // namespace detail

/// Gaussian binomial [n br k]; 0 outside 0 <= k <= n. Built by all three of:
/// Pascal recurrence, factorial-ratio exact division, cyclotomic product.
inline IntPolynomial q_binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return {};
    auto& caches = detail::qkit_caches();
    const auto key = std::make_pair(n, k);
    {
        std::shared_lock lock(caches.mutex);
        auto it = caches.qbinomial.find(key);
        if (it != caches.qbinomial.end()) return it->second;
    }
    IntPolynomial pascal = (*detail::pascal_row(n))[static_cast<size_t>(k)];
    IntPolynomial ratio = detail::q_binomial_ratio(n, k);
    IntPolynomial cyclo = detail::q_binomial_cyclotomic(n, k);
    if (!(pascal == ratio && ratio == cyclo))
        throw InternalMismatch("q_binomial(" + std::to_string(n) + "," + std::to_string(k) +
                               "): the three constructions disagree");
    {
        std::unique_lock lock(caches.mutex);
        caches.qbinomial.emplace(key, pascal);
    }
    return pascal;
}

/// Index pair of a Gaussian binomial; the value is the zero polynomial unless
/// 0 <= k <= n.
struct QBinomialSpec {
    long n = 0;
    long k = 0;

    bool in_range() const { return n >= 0 && k >= 0 && k <= n; }
    IntPolynomial value() const { return q_binomial(n, k); }
    bool operator==(const QBinomialSpec&) const = default;
};

// ---------------------------------------------------------------------------
// Factored forms

/// sign-free factored representation q^unit_power * prod_d Phi_d(q)^mult.
struct FactorForm {
    long unit_power = 0;
    std::map<long, long> cyclotomic_multiplicities;

    bool operator==(const FactorForm&) const = default;

    /// True when the form is a bare q-power (no cyclotomic part).
    bool is_unit() const { return cyclotomic_multiplicities.empty(); }

    LaurentPolynomial expand() const {
        IntPolynomial acc = IntPolynomial::constant(1);
        for (const auto& [d, mult] : cyclotomic_multiplicities)
            acc = acc * poly_pow(cyclotomic(d), static_cast<unsigned long>(mult));
        return q_power(unit_power) * LaurentPolynomial(acc);
    }
};

/// [n br k] = prod Phi_d over d <= n with floor(k/d)+floor((n-k)/d) < floor(n/d).
inline FactorForm factor_form_qbinomial(long n, long k) {
    if (k < 0 || k > n) throw DomainError("factor_form_qbinomial: need 0 <= k <= n");
    FactorForm f;
    for (long d = 2; d <= n; ++d)
        if (k / d + (n - k) / d < n / d) f.cyclotomic_multiplicities[d] = 1;
    return f;
}

/// [n] = prod_{d|n, d>1} Phi_d(q).
inline FactorForm factor_form_qint(long n) {
    if (n < 1) throw DomainError("factor_form_qint: n must be positive");
    FactorForm f;
    for (long d : divisors(n))
        if (d > 1) f.cyclotomic_multiplicities[d] = 1;
    return f;
}

/// 1 + q^n = [2n]/[n] = prod Phi_d over d | 2n with d not | n.
inline FactorForm factor_form_one_plus_qpow(long n) {
    if (n < 1) throw DomainError("factor_form_one_plus_qpow: n must be positive");
    FactorForm f;
    for (long d : divisors(2 * n))
        if (n % d != 0) f.cyclotomic_multiplicities[d] = 1;
    return f;
}

/// Index-wise minimum of multiplicities; coprimality <=> empty result.
inline FactorForm factored_gcd(const FactorForm& a, const FactorForm& b) {
    FactorForm g;
    g.unit_power = std::min(a.unit_power, b.unit_power);
    for (const auto& [d, mult] : a.cyclotomic_multiplicities) {
        auto it = b.cyclotomic_multiplicities.find(d);
        if (it != b.cyclotomic_multiplicities.end())
            g.cyclotomic_multiplicities[d] = std::min(mult, it->second);
    }
    return g;
}

} // namespace qcat
