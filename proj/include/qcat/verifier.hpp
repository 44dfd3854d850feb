#pragma once

/**
 * @file verifier.hpp
 * @brief One operation per claim: each check builds both sides of an identity,
 *        or a sum and its modulus, and decides equality / Laurent-divisibility
 *        exactly. Every Holds is a certificate (an exact quotient or a zero
 *        difference); there are no probabilistic or modular shortcuts.
 *
 * Naming note: the integer sums of the telescoped identity are zeil_S/zeil_T;
 * the q-polynomial sums of the divisibility theorems are the sr_, sbar_ and
 * xr_ builders, since the source families overload S and T for both.
 */

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qcat/catalan.hpp"

namespace qcat {

enum class CheckStatus { Holds, Fails, DomainSkip };

inline std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Holds: return "Holds";
        case CheckStatus::Fails: return "Fails";
        case CheckStatus::DomainSkip: return "DomainSkip";
    }
    return "?";
}

using Witness = std::variant<LaurentPolynomial, Rat>;

inline std::string to_text(const Witness& w) {
    if (std::holds_alternative<LaurentPolynomial>(w))
        return to_text(std::get<LaurentPolynomial>(w));
    return to_string(std::get<Rat>(w));
}

/// Outcome record of one verification.
struct CheckResult {
    std::string check_id;
    std::vector<std::pair<std::string, long>> params;
    CheckStatus status = CheckStatus::Holds;
    std::optional<Witness> witness;  // quotient, or the offending difference on Fails
    std::chrono::nanoseconds elapsed{0};

    bool holds() const { return status == CheckStatus::Holds; }
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(elapsed).count();
    }
};

/// Index data of the multi-index sums: a; n_1..n_m (n_{m+1} = n_1); r; j.
struct MultiIndexSpec {
    long a = 0;
    std::vector<long> ns;
    long r = 0;
    long j = 0;

    long m() const { return static_cast<long>(ns.size()); }

    void validate() const {
        if (ns.empty()) throw DomainError("MultiIndexSpec: need at least one index");
        for (long n : ns)
            if (n < 1) throw DomainError("MultiIndexSpec: indices must be positive");
        if (a < 0 || a > ns.front()) throw DomainError("MultiIndexSpec: need 0 <= a <= n1");
        if (r < 0) throw DomainError("MultiIndexSpec: r must be non-negative");
    }

    std::vector<std::pair<std::string, long>> params() const {
        std::vector<std::pair<std::string, long>> p{{"a", a}};
        for (size_t i = 0; i < ns.size(); ++i)
            p.emplace_back("n" + std::to_string(i + 1), ns[i]);
        p.emplace_back("r", r);
        p.emplace_back("j", j);
        return p;
    }
};

namespace detail {

class Stopwatch {
public:
    Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
    std::chrono::nanoseconds elapsed() const {
        return std::chrono::duration_cast<std::chrono::nanoseconds>(
            std::chrono::steady_clock::now() - t0_);
    }

private:
    std::chrono::steady_clock::time_point t0_;
};

/// Tracks the first failure evidence while later assertions still run.
struct Verdict {
    bool ok = true;
    std::optional<Witness> failure;

    void require(bool cond, Witness evidence) {
        if (cond || !ok) return;
        if (!failure) failure = std::move(evidence);
        ok = false;
    }
    void require_equal(const Rat& lhs, const Rat& rhs) { require(lhs == rhs, Rat(lhs - rhs)); }
    void require_equal(const LaurentPolynomial& lhs, const LaurentPolynomial& rhs) {
        require(lhs == rhs, lhs - rhs);
    }
    void require_equal(const IntPolynomial& lhs, const IntPolynomial& rhs) {
        require_equal(LaurentPolynomial(lhs), LaurentPolynomial(rhs));
    }
};

inline CheckResult finish(std::string id, std::vector<std::pair<std::string, long>> params,
                          const Verdict& v, std::optional<Witness> holds_witness,
                          const Stopwatch& sw) {
    CheckResult res;
    res.check_id = std::move(id);
    res.params = std::move(params);
    res.status = v.ok ? CheckStatus::Holds : CheckStatus::Fails;
    res.witness = v.ok ? std::move(holds_witness) : v.failure;
    res.elapsed = sw.elapsed();
    return res;
}

} // namespace detail

// ---------------------------------------------------------------------------
// q = 1 scalar sums

/// Left side of the telescoped identity: 2m C(2n,n)^-2 C(2m,m)^-1 C(n+m,n)^2
/// sum_k B_{n,k}^2 B_{m,k}; zero at m = 0.
inline Rat zeil_S(long n, long m) {
    if (m == 0) return Rat(0);
    Int sum(0);
    for (long k = 0; k <= m; ++k) {
        Int bn = triangle_number(TriangleKind::ShapiroB, n, k);
        sum += bn * bn * triangle_number(TriangleKind::ShapiroB, m, k);
    }
    Int c = binomial_int(n + m, n);
    Rat num(Int(2 * m) * c * c * sum);
    Int c2n = binomial_int(2 * n, n);
    return num / Rat(c2n * c2n * binomial_int(2 * m, m));
}

/// Right side: sum_{k=0}^{m} k C(m+n-k-1, n-1)^2.
inline Int zeil_T(long n, long m) {
    Int sum(0);
    for (long k = 0; k <= m; ++k) {
        Int b = binomial_int(m + n - k - 1, n - 1);
        sum += Int(k) * b * b;
    }
    return sum;
}

// ---------------------------------------------------------------------------
// q-polynomial sum builders (total on empty ranges: a > n gives 0)

/// sum_{k=a}^{n} [2k][k]^{2r} q^{(r+1)(n-k)+j k^2} [2n br n-k], j in {0,1}.
inline IntPolynomial sr_single_sum(long a, long n, long r, long j) {
    IntPolynomial acc;
    for (long k = a; k <= n; ++k) {
        if (k == 0) continue;  // [2k] vanishes
        IntPolynomial term = q_integer(2 * k) * poly_pow(q_integer(k), 2 * r);
        term = term * IntPolynomial::monomial(Int(1), (r + 1) * (n - k) + j * k * k);
        acc = acc + term * q_binomial(2 * n, n - k);
    }
    return acc;
}

inline IntPolynomial sr_single_modulus(long a, long n) {
    return q_integer(n + a) * q_binomial(2 * n, n - a);
}

/// sum_{k=a}^{n1} [2k][k]^{2r} q^{j k^2-(r+1)k} prod_i [n_i+n_{i+1} br n_i+k].
inline LaurentPolynomial sr_multi_sum(long a, const std::vector<long>& ns, long r, long j) {
    const long m = static_cast<long>(ns.size());
    LaurentPolynomial acc;
    for (long k = a; k <= ns.front(); ++k) {
        if (k == 0) continue;
        IntPolynomial prod = q_integer(2 * k) * poly_pow(q_integer(k), 2 * r);
        for (long i = 0; i < m && !prod.is_zero(); ++i) {
            long next = ns[static_cast<size_t>((i + 1) % m)];
            prod = prod * q_binomial(ns[static_cast<size_t>(i)] + next,
                                     ns[static_cast<size_t>(i)] + k);
        }
        if (prod.is_zero()) continue;
        acc = acc + q_power(j * k * k - (r + 1) * k) * LaurentPolynomial(prod);
    }
    return acc;
}

inline IntPolynomial sr_multi_modulus(const std::vector<long>& ns, long a) {
    return q_integer(ns.back() + a) * q_binomial(ns.front() + ns.back(), ns.front() - a);
}

/// sum_{k=a}^{n1} q^{j(k^2+k)-(2r+1)k} [2k+1]^{2r+1} prod_i [n_i+n_{i+1}+1 br n_i-k].
inline LaurentPolynomial sbar_multi_sum(long a, const std::vector<long>& ns, long r, long j) {
    const long m = static_cast<long>(ns.size());
    LaurentPolynomial acc;
    for (long k = a; k <= ns.front(); ++k) {
        IntPolynomial prod = poly_pow(q_integer(2 * k + 1), 2 * r + 1);
        for (long i = 0; i < m && !prod.is_zero(); ++i) {
            long next = ns[static_cast<size_t>((i + 1) % m)];
            prod = prod * q_binomial(ns[static_cast<size_t>(i)] + next + 1,
                                     ns[static_cast<size_t>(i)] - k);
        }
        if (prod.is_zero()) continue;
        acc = acc + q_power(j * (k * k + k) - (2 * r + 1) * k) * LaurentPolynomial(prod);
    }
    return acc;
}

inline IntPolynomial sbar_multi_modulus(const std::vector<long>& ns, long a) {
    return q_integer(ns.front() + ns.back() + 1) *
           q_binomial(ns.front() + ns.back(), ns.front() - a);
}

/// X_r(a,n,s;q) = sum_{k=a}^{n} q^{-(2r+1)k}[2k+1]^{2r+1}[2n+1 br n-k]
///               (q^{-k};q)_s (q^{k+1};q)_s.
inline LaurentPolynomial xr_sum(long a, long n, long r, long s) {
    LaurentPolynomial acc;
    for (long k = a; k <= n; ++k) {
        LaurentPolynomial term = q_power(-(2 * r + 1) * k) *
                                 LaurentPolynomial(poly_pow(q_integer(2 * k + 1), 2 * r + 1) *
                                                   q_binomial(2 * n + 1, n - k));
        if (s > 0) term = term * q_pochhammer_power(-k, s) * q_pochhammer_power(k + 1, s);
        acc = acc + term;
    }
    return acc;
}

inline IntPolynomial xr_modulus(long n, long a) {
    return q_integer(2 * n + 1) * q_binomial(2 * n, n - a);
}

/// sum_{k=a}^{n} (1+q^k) B_{n,k}(q)^{2r+1} q^{j k^2-(r+1)k}.
inline LaurentPolynomial bnk_power_sum(long n, long a, long r, long j) {
    LaurentPolynomial acc;
    for (long k = std::max(a, 1L); k <= n; ++k) {
        IntPolynomial one_plus_qk = IntPolynomial::constant(1) + IntPolynomial::monomial(Int(1), k);
        IntPolynomial prod = one_plus_qk * poly_pow(b_poly_q(n, k), 2 * r + 1);
        acc = acc + q_power(j * k * k - (r + 1) * k) * LaurentPolynomial(prod);
    }
    return acc;
}

inline IntPolynomial bnk_power_modulus(long n, long a) {
    IntPolynomial one_plus_qn = IntPolynomial::constant(1) + IntPolynomial::monomial(Int(1), n);
    return one_plus_qn * q_binomial(2 * n - 1, n - a);
}

/// sum_{k=a}^{n} A_{n,k}(q)^{2r+1} q^{j(k^2+k)}.
inline LaurentPolynomial ank_power_sum(long n, long a, long r, long j) {
    LaurentPolynomial acc;
    for (long k = a; k <= n; ++k) {
        IntPolynomial prod = poly_pow(a_poly_q(n, k), 2 * r + 1);
        acc = acc + q_power(j * (k * k + k)) * LaurentPolynomial(prod);
    }
    return acc;
}

inline IntPolynomial ank_power_modulus(long n, long a) { return q_binomial(2 * n, n - a); }

// ---------------------------------------------------------------------------
// Divisibility plumbing shared by the q-checks

namespace detail {

/// Divides sum by modulus; on success the quotient becomes the witness, on
/// failure the nonzero sum does. The moduli of every caller are nonzero for
/// all validated inputs, so laurent_quotient's zero-modulus throw is the
/// right behavior here.
inline void divisibility_verdict(const LaurentPolynomial& sum, const IntPolynomial& modulus,
                                 Verdict& v, std::optional<Witness>& quotient_witness) {
    auto q = laurent_quotient(sum, modulus);
    v.require(q.has_value(), sum);
    if (q) quotient_witness = std::move(*q);
}

} // namespace detail

// ---------------------------------------------------------------------------
// Checks

/// sum_k B_{n,k}^2 B_{m,k} against its bracketed closed form, under
/// assignment 0: (r,s) = (m,n) or 1: (r,s) = (n,m).
inline CheckResult check_identity_one(long n, long m, long assign) {
    if (n < 1 || m < 1) throw DomainError("check_identity_one: n, m must be positive");
    if (assign != 0 && assign != 1) throw DomainError("check_identity_one: assign must be 0 or 1");
    detail::Stopwatch sw;
    std::vector<std::pair<std::string, long>> params{{"n", n}, {"m", m}, {"assign", assign}};
    const long r = assign == 0 ? m : n;
    const long s = assign == 0 ? n : m;
    if (r == 0) {
        CheckResult res;
        res.check_id = "identity-one";
        res.params = std::move(params);
        res.status = CheckStatus::DomainSkip;
        res.elapsed = sw.elapsed();
        return res;
    }

    Int lhs_sum(0);
    for (long k = 0; k <= r; ++k) {
        Int bn = triangle_number(TriangleKind::ShapiroB, n, k);
        lhs_sum += bn * bn * triangle_number(TriangleKind::ShapiroB, m, k);
    }
    Rat lhs(lhs_sum);

    Int inner(0);
    for (long k = 0; k < r; ++k)
        inner += binomial_int(s + k, s) * binomial_int(n + k, n - 1);
    Rat bracket = Rat(1) - Rat(Int(n + 2 * m) * inner) /
                               Rat(Int(r) * binomial_int(n + m, n) * binomial_int(n + r, n));
    Int c2n = binomial_int(2 * n, n);
    Rat rhs = Rat(c2n * c2n * binomial_int(2 * m, m)) / Rat(2) * bracket;

    detail::Verdict v;
    v.require_equal(lhs, rhs);
    return detail::finish("identity-one", std::move(params), v, std::nullopt, sw);
}

/// sum_k B_{n,k}^3 against both published right-hand sides.
inline CheckResult check_recover(long n) {
    if (n < 1) throw DomainError("check_recover: n must be positive");
    detail::Stopwatch sw;
    Int lhs(0);
    for (long k = 0; k <= n; ++k) {
        Int b = triangle_number(TriangleKind::ShapiroB, n, k);
        lhs += b * b * b;
    }
    Int c = binomial_int(2 * n, n);

    Int inner1(0);
    for (long k = n; k <= 2 * n - 1; ++k)
        inner1 += binomial_int(k, n) * binomial_int(k, n - 1);
    Rat rhs1 = Rat(c * c * c) / 2 - Rat(3) / 2 * Rat(c * inner1);

    Int inner2(0);
    for (long k = 1; k <= n; ++k) {
        Int b = binomial_int(2 * n - k - 1, n - 1);
        inner2 += Int(k) * b * b;
    }
    Rat rhs2 = Rat(c * inner2) / Rat(2 * n);

    detail::Verdict v;
    v.require_equal(Rat(lhs), rhs1);
    v.require_equal(Rat(lhs), rhs2);
    return detail::finish("recover", {{"n", n}}, v, std::nullopt, sw);
}

/// sum_k C(n+k-2,k-1)C(n-1,k-1)C(m+n,m-k) = sum_k k C(m+n-k-1,n-1)^2.
inline CheckResult check_new_identity(long m, long n) {
    if (n < 1) throw DomainError("check_new_identity: n must be positive");
    if (m < 0) throw DomainError("check_new_identity: m must be non-negative");
    detail::Stopwatch sw;
    Int lhs(0);
    for (long k = 1; k <= m; ++k)
        lhs += binomial_int(n + k - 2, k - 1) * binomial_int(n - 1, k - 1) *
               binomial_int(m + n, m - k);
    Int rhs(0);
    for (long k = 0; k <= m; ++k) {
        Int b = binomial_int(m + n - k - 1, n - 1);
        rhs += Int(k) * b * b;
    }
    detail::Verdict v;
    v.require_equal(Rat(lhs), Rat(rhs));
    return detail::finish("new-identity", {{"m", m}, {"n", n}}, v, std::nullopt, sw);
}

/// The three-index cubic-sum identity, in both printed normalizations, plus its
/// n1 = n3 specialization when applicable.
inline CheckResult check_n123(long n1, long n2, long n3) {
    if (n1 < 1 || n2 < 1 || n3 < 1) throw DomainError("check_n123: indices must be positive");
    detail::Stopwatch sw;
    detail::Verdict v;

    Int common(0);
    for (long k = 1; k <= n1; ++k)
        common += binomial_int(n3 + k - 2, k - 1) * binomial_int(n1 - 1, k - 1) *
                  binomial_int(n2 + n3, n2 - k);

    // mixed-index form
    Int lhs_a(0);
    for (long k = 1; k <= n1; ++k)
        lhs_a += Int(k) * Int(k) * Int(k) * binomial_int(n1 + n2, n1 + k) *
                 binomial_int(n2 + n3, n2 + k) * binomial_int(n3 + n1, n3 + k);
    Rat rhs_a = Rat(Int(n1) * Int(n3) * binomial_int(n1 + n3, n1) * common) / 2;
    v.require_equal(Rat(lhs_a), rhs_a);

    // doubled-index form; the factorial ratio is the reciprocal of the one in
    // the source display, which is inverted there (check the (2,1,2) instance)
    Rat lhs_b(0);
    for (long k = 1; k <= n1; ++k)
        lhs_b += Rat(Int(k) * Int(k) * Int(k) * binomial_int(2 * n1, n1 + k) *
                     binomial_int(2 * n2, n2 + k) * binomial_int(2 * n3, n3 + k));
    lhs_b /= Rat(Int(n1) * Int(n2) * Int(n3));
    Rat ratio = Rat(factorial_int(2 * n1) * factorial_int(2 * n2) * factorial_int(2 * n3)) /
                Rat(factorial_int(n1 + n2) * factorial_int(n2 + n3) * factorial_int(n3 + n1));
    Rat rhs_b = Rat(binomial_int(n1 + n3, n1) * common) * ratio / Rat(2 * n2);
    v.require_equal(lhs_b, rhs_b);

    // n1 = n3 specialization ties the cubic sum to the B-triangle sum
    if (n1 == n3) {
        const long n = n1, m = n2;
        Int rhs_c(0);
        for (long k = 1; k <= n; ++k)
            rhs_c += binomial_int(n + k - 2, k - 1) * binomial_int(n - 1, k - 1) *
                     binomial_int(m + n, m - k);
        v.require_equal(zeil_S(n, m), Rat(rhs_c));
    }
    return detail::finish("n123", {{"n1", n1}, {"n2", n2}, {"n3", n3}}, v, std::nullopt, sw);
}

/// The machine-derived first-order recurrences for zeil_S and zeil_T, their
/// shared initial value, and S = T on 0..m_max.
inline CheckResult check_zeilberger_recurrences(long n, long m_max) {
    if (n < 1 || m_max < 1)
        throw DomainError("check_zeilberger_recurrences: n, m_max must be positive");
    detail::Stopwatch sw;
    detail::Verdict v;
    std::vector<Rat> s(static_cast<size_t>(m_max) + 1), t(static_cast<size_t>(m_max) + 1);
    for (long m = 0; m <= m_max; ++m) {
        s[static_cast<size_t>(m)] = zeil_S(n, m);
        t[static_cast<size_t>(m)] = Rat(zeil_T(n, m));
    }
    v.require_equal(s[0], Rat(0));
    v.require_equal(t[0], Rat(0));
    for (long m = 0; m <= m_max; ++m) v.require_equal(s[static_cast<size_t>(m)], t[static_cast<size_t>(m)]);
    for (long m = 0; m < m_max; ++m) {
        Int c = binomial_int(n + m, n);
        Rat inhom(Int(n) * c * c);
        v.require_equal(Rat(2 * m + n) * s[static_cast<size_t>(m + 1)],
                        Rat(2 * m + n + 2) * s[static_cast<size_t>(m)] + inhom);
        v.require_equal(Rat(2 * m + n) * t[static_cast<size_t>(m + 1)],
                        Rat(2 * m + n + 2) * t[static_cast<size_t>(m)] + inhom);
    }
    return detail::finish("zeilberger", {{"n", n}, {"mmax", m_max}}, v, std::nullopt, sw);
}

/// The sufficiency identity for the swapped assignment and its Gosper-provable
/// equivalent display.
inline CheckResult check_one_suff(long n, long m) {
    if (n < 1 || m < 1) throw DomainError("check_one_suff: n, m must be positive");
    detail::Stopwatch sw;
    detail::Verdict v;

    Int left_inner(0);
    for (long k = 0; k < m; ++k)
        left_inner += binomial_int(n + k, n) * binomial_int(n + k, n - 1);
    Rat lhs = Rat(left_inner) / Rat(Int(m) * binomial_int(n + m, n));

    Int right_inner(0);
    for (long k = 0; k < n; ++k)
        right_inner += binomial_int(m + k, m) * binomial_int(n + k, n - 1);
    Rat rhs = Rat(right_inner) / Rat(Int(n) * binomial_int(2 * n, n));
    v.require_equal(lhs, rhs);

    Rat gosper_lhs(0);
    for (long k = 0; k < n; ++k)
        gosper_lhs += Rat(Int((n + k + 1) * m + (n + 1) * (k + 1)) * binomial_int(m + k, m) *
                          binomial_int(n + k, n - 1)) /
                      Rat(m + 1);
    Rat gosper_rhs(Int(n) * binomial_int(n + m, n - 1) * binomial_int(2 * n, n));
    v.require_equal(gosper_lhs, gosper_rhs);
    return detail::finish("one-suff", {{"n", n}, {"m", m}}, v, std::nullopt, sw);
}

/// Single-index power-sum divisibility (j in {0,1}); also checks the r=0
/// telescoped closed form, the r-step recurrence at j=0, and the q -> 1/q
/// reversal at j=1. Returns the sum alongside the verdict.
inline std::pair<LaurentPolynomial, CheckResult> s_r_single(long a, long n, long r, long j) {
    if (n < 1) throw DomainError("s_r_single: n must be positive");
    if (a < 0 || a > n) throw DomainError("s_r_single: need 0 <= a <= n");
    if (r < 0) throw DomainError("s_r_single: r must be non-negative");
    if (j != 0 && j != 1) throw DomainError("s_r_single: j must be 0 or 1");
    detail::Stopwatch sw;
    detail::Verdict v;

    IntPolynomial sum = sr_single_sum(a, n, r, j);
    IntPolynomial modulus = sr_single_modulus(a, n);
    std::optional<Witness> quotient;
    detail::divisibility_verdict(sum, modulus, v, quotient);

    if (r == 0 && j == 0) v.require_equal(sum, modulus);  // telescoping closed form
    if (r >= 1 && j == 0) {
        IntPolynomial rhs = q_integer(n) * q_integer(n) * sr_single_sum(a, n, r - 1, 0) -
                            IntPolynomial::monomial(Int(1), r) * q_integer(2 * n) *
                                q_integer(2 * n - 1) * sr_single_sum(a, n - 1, r - 1, 0);
        v.require_equal(sum, rhs);
    }
    if (j == 1) {
        // T_r(a,n;q) = q^{n^2+2rn+2n-2r-1} S_r(a,n;1/q)
        LaurentPolynomial rhs = q_power(n * n + 2 * r * n + 2 * n - 2 * r - 1) *
                                laurent_reciprocal(LaurentPolynomial(sr_single_sum(a, n, r, 0)));
        v.require_equal(LaurentPolynomial(sum), rhs);
    }
    auto res = detail::finish("sr-single", {{"a", a}, {"n", n}, {"r", r}, {"j", j}}, v,
                              std::move(quotient), sw);
    return {LaurentPolynomial(sum), std::move(res)};
}

namespace detail {

/// Normalized multi-index ratio; lenient about a zero head index so the
/// recurrence right-hand sides can recurse through l = 0 when a = 0.
/// Throws only on structurally bad input.
inline std::optional<LaurentPolynomial> sr_multi_ratio(long a, const std::vector<long>& ns,
                                                       long r, long j) {
    LaurentPolynomial num = sr_multi_sum(a, ns, r, j);
    IntPolynomial mod = sr_multi_modulus(ns, a);
    if (mod.is_zero()) throw DomainError("sr_multi_ratio: zero modulus");
    return laurent_quotient(num, mod);
}

inline std::optional<LaurentPolynomial> sbar_multi_ratio(long a, const std::vector<long>& ns,
                                                         long r, long j) {
    LaurentPolynomial num = sbar_multi_sum(a, ns, r, j);
    IntPolynomial mod = sbar_multi_modulus(ns, a);
    if (mod.is_zero()) throw DomainError("sbar_multi_ratio: zero modulus");
    return laurent_quotient(num, mod);
}

/// Sub-index list (l, n3, ..., nm) used by the multi-index recurrences.
inline std::vector<long> recurrence_tail(long l, const std::vector<long>& ns) {
    std::vector<long> sub{l};
    sub.insert(sub.end(), ns.begin() + 2, ns.end());
    return sub;
}

} // namespace detail

/// Multi-index Laurent-divisibility for the even-weight sums ([2k][k]^{2r}
/// against cyclic products of [n_i+n_{i+1} br n_i+k]): verdict on the
/// normalized ratio plus, where applicable, the m>=3 and m=2 recurrences, the
/// r=0 closed form, the j=0 reversal, and the m=1 tie to the single sum.
/// Returns the unnormalized sum alongside the verdict.
inline std::pair<LaurentPolynomial, CheckResult> s_r_multi(const MultiIndexSpec& spec) {
    spec.validate();
    detail::Stopwatch sw;
    detail::Verdict v;
    const long m = spec.m();
    const long j = spec.j;

    LaurentPolynomial num = sr_multi_sum(spec.a, spec.ns, spec.r, j);
    auto ratio = detail::sr_multi_ratio(spec.a, spec.ns, spec.r, j);
    std::optional<Witness> quotient;
    v.require(ratio.has_value(), num);
    if (ratio) quotient = *ratio;

    if (ratio && m >= 2 && j >= 1 && j <= m) {
        // recurrence in j: S_r(a;n1..nm;j) = sum_l q^{l^2} [n1-a br l-a] W_l S_r(a;l,n3..nm;j-1)
        LaurentPolynomial rhs;
        for (long l = spec.a; l <= spec.ns.front(); ++l) {
            IntPolynomial w = q_binomial(spec.ns.front() - spec.a, l - spec.a);
            w = w * (m >= 3 ? q_binomial(spec.ns[1] + spec.ns[2], spec.ns[1] - l)
                            : q_binomial(spec.ns[1] + spec.a - 1, l + spec.a - 1));
            if (w.is_zero()) continue;
            auto sub = detail::sr_multi_ratio(spec.a, detail::recurrence_tail(l, spec.ns),
                                              spec.r, j - 1);
            v.require(sub.has_value(), num);
            if (!sub) break;
            rhs = rhs + q_power(l * l) * LaurentPolynomial(w) * *sub;
        }
        if (v.ok) v.require_equal(*ratio, rhs);
    }
    if (ratio && m == 2 && spec.r == 0 && j == 1) {
        LaurentPolynomial closed =
            q_power(spec.a * spec.a - spec.a) *
            LaurentPolynomial(q_binomial(spec.ns[0] + spec.ns[1] - 1, spec.ns[0] + spec.a - 1));
        v.require_equal(*ratio, closed);
    }
    if (ratio && m >= 2 && j == 0) {
        // reversal: S_r(..;0,q) = S_r(..;m,1/q) q^{E}
        auto top = detail::sr_multi_ratio(spec.a, spec.ns, spec.r, m);
        v.require(top.has_value(), num);
        if (top) {
            long e = -spec.ns.back() + spec.a * (spec.a + spec.ns.back() - spec.ns.front() - 1) -
                     2 * spec.r;
            for (size_t i = 0; i + 1 < spec.ns.size(); ++i) e += spec.ns[i] * spec.ns[i + 1];
            v.require_equal(*ratio, q_power(e) * laurent_reciprocal(*top));
        }
    }
    if (m == 1 && (j == 0 || j == 1)) {
        LaurentPolynomial tied = q_power(-(spec.r + 1) * spec.ns.front()) *
                                 LaurentPolynomial(sr_single_sum(spec.a, spec.ns.front(), spec.r, j));
        v.require_equal(num, tied);
    }
    auto res = detail::finish("sr-multi", spec.params(), v, std::move(quotient), sw);
    return {std::move(num), std::move(res)};
}

/// Odd B(q)-power divisibility: sum (1+q^k) B_{n,k}(q)^{2r+1} q^{jk^2-(r+1)k}
/// modulo (1+q^n)[2n-1 br n-a]; j outside 0..2r+1 is accepted and reported.
inline CheckResult check_bnk_power(long n, long a, long r, long j) {
    if (n < 1) throw DomainError("check_bnk_power: n must be positive");
    if (a < 0 || a > n) throw DomainError("check_bnk_power: need 0 <= a <= n");
    if (r < 0) throw DomainError("check_bnk_power: r must be non-negative");
    detail::Stopwatch sw;
    detail::Verdict v;
    LaurentPolynomial sum = bnk_power_sum(n, a, r, j);
    std::optional<Witness> quotient;
    detail::divisibility_verdict(sum, bnk_power_modulus(n, a), v, quotient);
    return detail::finish("bnk-power", {{"n", n}, {"a", a}, {"r", r}, {"j", j}}, v,
                          std::move(quotient), sw);
}

/// Odd-weight Pochhammer lemma sums: X_r(a,n,s;q) ≡ 0 mod [2n+1][2n br n-a],
/// the s=0,r=0 closed form, the bracket product identity, and the three-term
/// r-recurrence. The reported sum carries a q^{n-k}-style normalization (a
/// global q^n times X_r), which does not affect divisibility.
inline CheckResult x_r_sum_check(long a, long n, long r, long s) {
    if (n < 1) throw DomainError("x_r_sum_check: n must be positive");
    if (a < 0 || a > n) throw DomainError("x_r_sum_check: need 0 <= a <= n");
    if (r < 0 || s < 0) throw DomainError("x_r_sum_check: r, s must be non-negative");
    detail::Stopwatch sw;
    detail::Verdict v;

    LaurentPolynomial x = xr_sum(a, n, r, s);
    LaurentPolynomial sum = q_power(n) * x;
    IntPolynomial modulus = xr_modulus(n, a);
    std::optional<Witness> quotient;
    detail::divisibility_verdict(sum, modulus, v, quotient);

    if (r == 0 && s == 0) v.require_equal(sum, LaurentPolynomial(modulus));

    // [2n][2n+1][2n-1][2n-2 br n-a-1] = [2n+1][2n br n-a][n-a][n+a]
    IntPolynomial lhs27 = q_integer(2 * n) * q_integer(2 * n + 1) * q_integer(2 * n - 1) *
                          q_binomial(2 * n - 2, n - a - 1);
    IntPolynomial rhs27 = q_integer(2 * n + 1) * q_binomial(2 * n, n - a) * q_integer(n - a) *
                          q_integer(n + a);
    v.require_equal(lhs27, rhs27);

    if (r >= 1) {
        LaurentPolynomial one = q_power(0);
        LaurentPolynomial rhs =
            q_power(-2 * n) * LaurentPolynomial(q_integer(2 * n + 1) * q_integer(2 * n + 1)) *
                xr_sum(a, n, r - 1, s) -
            q_power(-2 * n) * LaurentPolynomial(q_integer(2 * n) * q_integer(2 * n + 1)) *
                (one + q_power(n - s)) * (one + q_power(n + s + 1)) * xr_sum(a, n - 1, r - 1, s) +
            q_power(-n - s) * LaurentPolynomial(q_integer(2 * n) * q_integer(2 * n + 1)) *
                xr_sum(a, n - 1, r - 1, s + 1);
        v.require_equal(x, rhs);
    }
    return detail::finish("xr-sum", {{"a", a}, {"n", n}, {"r", r}, {"s", s}}, v,
                          std::move(quotient), sw);
}

/// Multi-index Laurent-divisibility for the odd-weight sums ([2k+1]^{2r+1}
/// against cyclic products of [n_i+n_{i+1}+1 br n_i-k]) with its recurrences,
/// closed form, j=0 reversal, and the m=1 tie to the Pochhammer lemma sum.
inline std::pair<LaurentPolynomial, CheckResult> sbar_r_multi(const MultiIndexSpec& spec) {
    spec.validate();
    detail::Stopwatch sw;
    detail::Verdict v;
    const long m = spec.m();
    const long j = spec.j;

    LaurentPolynomial num = sbar_multi_sum(spec.a, spec.ns, spec.r, j);
    auto ratio = detail::sbar_multi_ratio(spec.a, spec.ns, spec.r, j);
    std::optional<Witness> quotient;
    v.require(ratio.has_value(), num);
    if (ratio) quotient = *ratio;

    if (ratio && m >= 2 && j >= 1 && j <= m) {
        LaurentPolynomial rhs;
        for (long l = spec.a; l <= spec.ns.front(); ++l) {
            IntPolynomial w = q_binomial(spec.ns.front() - spec.a, l - spec.a);
            w = w * (m >= 3 ? q_binomial(spec.ns[1] + spec.ns[2] + 1, spec.ns[1] - l)
                            : q_binomial(spec.ns[1] + spec.a, l + spec.a));
            if (w.is_zero()) continue;
            auto sub = detail::sbar_multi_ratio(spec.a, detail::recurrence_tail(l, spec.ns),
                                                spec.r, j - 1);
            v.require(sub.has_value(), num);
            if (!sub) break;
            rhs = rhs + q_power(l * l + l) * LaurentPolynomial(w) * *sub;
        }
        if (v.ok) v.require_equal(*ratio, rhs);
    }
    if (ratio && m == 2 && spec.r == 0 && j == 1) {
        LaurentPolynomial closed =
            q_power(spec.a * spec.a) *
            LaurentPolynomial(q_binomial(spec.ns[0] + spec.ns[1], spec.ns[0] + spec.a));
        v.require_equal(*ratio, closed);
    }
    if (ratio && m >= 2 && j == 0) {
        auto top = detail::sbar_multi_ratio(spec.a, spec.ns, spec.r, m);
        v.require(top.has_value(), num);
        if (top) {
            // exponent includes +sum(n_i); the printed display drops that term
            long e = spec.a * (spec.a + spec.ns.back() - spec.ns.front()) - spec.ns.front() -
                     spec.ns.back();
            for (long n : spec.ns) e += n;
            for (size_t i = 0; i + 1 < spec.ns.size(); ++i) e += spec.ns[i] * spec.ns[i + 1];
            v.require_equal(*ratio, q_power(e) * laurent_reciprocal(*top));
        }
    }
    if (m == 1 && j == 0) v.require_equal(num, xr_sum(spec.a, spec.ns.front(), spec.r, 0));
    auto res = detail::finish("sbar-multi", spec.params(), v, std::move(quotient), sw);
    return {std::move(num), std::move(res)};
}

/// Odd A(q)-power divisibility: sum A_{n,k}(q)^{2r+1} q^{j(k^2+k)} mod [2n br n-a].
inline CheckResult check_ank_power(long n, long a, long r, long j) {
    if (n < 1) throw DomainError("check_ank_power: n must be positive");
    if (a < 0 || a > n) throw DomainError("check_ank_power: need 0 <= a <= n");
    if (r < 0) throw DomainError("check_ank_power: r must be non-negative");
    detail::Stopwatch sw;
    detail::Verdict v;
    LaurentPolynomial sum = ank_power_sum(n, a, r, j);
    std::optional<Witness> quotient;
    detail::divisibility_verdict(sum, ank_power_modulus(n, a), v, quotient);
    return detail::finish("ank-power", {{"n", n}, {"a", a}, {"r", r}, {"j", j}}, v,
                          std::move(quotient), sw);
}

enum class Q1Kind { Cnk, Bnk, Ank };

inline std::string check_id_of(Q1Kind kind) {
    switch (kind) {
        case Q1Kind::Cnk: return "q1-cnk";
        case Q1Kind::Bnk: return "q1-bnk";
        case Q1Kind::Ank: return "q1-ank";
    }
    return "?";
}

/// The q=1 odd-power congruences: sum C^{2r+1} mod C(n-1,a),
/// sum B^{2r+1} mod C(2n-1,n-a), sum A^{2r+1} mod C(2n,n-a).
inline CheckResult check_q1_congruence(Q1Kind kind, long n, long a, long r) {
    if (n < 1) throw DomainError("check_q1_congruence: n must be positive");
    if (r < 0) throw DomainError("check_q1_congruence: r must be non-negative");
    if (kind == Q1Kind::Cnk && a < 1)
        throw DomainError("check_q1_congruence(cnk): a must be positive");
    if (kind != Q1Kind::Cnk && (a < 0 || a > n))
        throw DomainError("check_q1_congruence: need 0 <= a <= n");
    detail::Stopwatch sw;
    const unsigned long power = static_cast<unsigned long>(2 * r + 1);

    Int sum(0), modulus(0);
    switch (kind) {
        case Q1Kind::Cnk:
            for (long k = 0; k <= a; ++k)
                sum += int_pow(triangle_number(TriangleKind::MianaC, n, k), power);
            modulus = binomial_int(n - 1, a);
            break;
        case Q1Kind::Bnk:
            for (long k = a; k <= n; ++k)
                sum += int_pow(triangle_number(TriangleKind::ShapiroB, n, k), power);
            modulus = binomial_int(2 * n - 1, n - a);
            break;
        case Q1Kind::Ank:
            for (long k = a; k <= n; ++k)
                sum += int_pow(triangle_number(TriangleKind::OddA, n, k), power);
            modulus = binomial_int(2 * n, n - a);
            break;
    }

    CheckResult res;
    res.check_id = check_id_of(kind);
    res.params = {{"n", n}, {"a", a}, {"r", r}};
    if (modulus == 0) {
        res.status = sum == 0 ? CheckStatus::DomainSkip : CheckStatus::Fails;
        if (sum != 0) res.witness = Rat(sum);
    } else {
        Rat quotient = make_rational(sum, modulus);
        res.status = is_integer(quotient) ? CheckStatus::Holds : CheckStatus::Fails;
        res.witness = quotient;
    }
    res.elapsed = sw.elapsed();
    return res;
}

/// The q-Chu–Vandermonde rewritings used by both multi-index proofs, with the
/// out-of-range-binomial convention standing in for 1/(q;q)_{negative} = 0.
inline CheckResult check_chu_vandermonde(long n1, long n2, long k) {
    if (n1 < 0 || n2 < 0) throw DomainError("check_chu_vandermonde: n1, n2 must be non-negative");
    if (k < 0 || k > std::min(n1, n2))
        throw DomainError("check_chu_vandermonde: need 0 <= k <= min(n1, n2)");
    detail::Stopwatch sw;
    detail::Verdict v;

    IntPolynomial plain;
    for (long s = 0; s <= n1 - k; ++s)
        plain = plain + IntPolynomial::monomial(Int(1), s * (s + 2 * k)) *
                            q_binomial(n1 - k, s) * q_binomial(n2 + k, s + 2 * k);
    v.require_equal(q_binomial(n1 + n2, n1 + k), plain);

    IntPolynomial paired;
    for (long s = 0; s <= n1 - k; ++s)
        paired = paired + IntPolynomial::monomial(Int(1), s * s + 2 * k * s) *
                              q_binomial(n1 + n2, n1 + k) * q_binomial(n1 + k, s + 2 * k) *
                              q_binomial(n2 - k, s);
    v.require_equal(q_binomial(n1 + n2, n1 + k) * q_binomial(n1 + n2, n2 + k), paired);

    IntPolynomial shifted;
    for (long s = 0; s <= n1 - k; ++s)
        shifted = shifted + IntPolynomial::monomial(Int(1), s * (s + 2 * k + 1)) *
                                q_binomial(n1 + k + 1, s + 2 * k + 1) * q_binomial(n2 - k, s);
    v.require_equal(q_binomial(n1 + n2 + 1, n1 - k), shifted);

    return detail::finish("chu-vandermonde", {{"n1", n1}, {"n2", n2}, {"k", k}}, v,
                          std::nullopt, sw);
}

} // namespace qcat
