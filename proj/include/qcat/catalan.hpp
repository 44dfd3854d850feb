#pragma once

/**
 * @file catalan.hpp
 * @brief The Catalan number families C_n, B_{n,k}, C_{n,k}, A_{n,k} and the
 *        q-polynomials B_{n,k}(q), A_{n,k}(q).
 *
 * Every family has two closed forms (a rational prefactor form and a
 * difference-of-binomials form); both are evaluated and compared on every
 * call, so a disagreement surfaces immediately as InternalMismatch.
 */

#include <string>
#include <vector>

#include "qcat/qkit.hpp"

namespace qcat {

/// C(n,k) with the sum-builder convention: 0 when k < 0, k > n, or n < 0.
inline Int binomial_int(long n, long k) {
    if (n < 0 || k < 0 || k > n) return Int(0);
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

inline Int factorial_int(long n) {
    if (n < 0) throw DomainError("factorial_int: negative n");
    Int out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

/// C_n = C(2n,n)/(n+1).
inline Int catalan_number(long n) {
    if (n < 0) throw DomainError("catalan_number: negative n");
    return exact_div(binomial_int(2 * n, n), Int(n + 1));
}

enum class TriangleKind { CatalanNumber, ShapiroB, MianaC, OddA };

inline std::string to_string(TriangleKind kind) {
    switch (kind) {
        case TriangleKind::CatalanNumber: return "catalan";
        case TriangleKind::ShapiroB: return "B";
        case TriangleKind::MianaC: return "C";
        case TriangleKind::OddA: return "A";
    }
    return "?";
}

namespace detail {

inline Int checked_prefactor(const Int& num, long den, const Int& diff_form,
                             const char* what) {
    // num/den must be an integer and agree with the difference form
    Rat pref = make_rational(num, Int(den));
    if (!is_integer(pref) || pref.get_num() != diff_form)
        throw InternalMismatch(std::string(what) + ": prefactor and difference forms disagree");
    return diff_form;
}

} // namespace detail

/// B_{n,k} = (k/n) C(2n,n-k), C_{n,k} = ((n-2k)/n) C(n,k),
/// A_{n,k} = ((2k+1)/(2n+1)) C(2n+1,n-k); each checked against its
/// difference-of-binomials form. n >= 1 for B/C/A; k ignored for C_n.
inline Int triangle_number(TriangleKind kind, long n, long k) {
    switch (kind) {
        case TriangleKind::CatalanNumber:
            return catalan_number(n);
        case TriangleKind::ShapiroB: {
            if (n < 1) throw DomainError("triangle_number(B): n must be positive");
            if (k < 0) return Int(0);  // outside Shapiro's triangle
            Int diff = binomial_int(2 * n - 1, n - k) - binomial_int(2 * n - 1, n - k - 1);
            return detail::checked_prefactor(Int(k) * binomial_int(2 * n, n - k), n, diff,
                                             "B_{n,k}");
        }
        case TriangleKind::MianaC: {
            if (n < 1) throw DomainError("triangle_number(C): n must be positive");
            Int diff = binomial_int(n - 1, k) - binomial_int(n - 1, k - 1);
            return detail::checked_prefactor(Int(n - 2 * k) * binomial_int(n, k), n, diff,
                                             "C_{n,k}");
        }
        case TriangleKind::OddA: {
            if (n < 1) throw DomainError("triangle_number(A): n must be positive");
            if (k < 0) throw DomainError("triangle_number(A): k must be non-negative");
            Int diff = binomial_int(2 * n, n - k) - binomial_int(2 * n, n - k - 1);
            return detail::checked_prefactor(Int(2 * k + 1) * binomial_int(2 * n + 1, n - k),
                                             2 * n + 1, diff, "A_{n,k}");
        }
    }
    throw DomainError("triangle_number: unknown kind");
}

/// B_{n,k}(q) = ([k]/[n]) [2n br n-k] for 1 <= k <= n; B_{n,0}(q) = 0.
inline IntPolynomial b_poly_q(long n, long k) {
    if (n < 1) throw DomainError("b_poly_q: n must be positive");
    if (k == 0) return {};
    if (k < 0 || k > n) throw DomainError("b_poly_q: need 0 <= k <= n");
    auto quo = poly_try_exact_div(q_integer(k) * q_binomial(2 * n, n - k), q_integer(n));
    if (!quo)
        throw InternalMismatch("b_poly_q(" + std::to_string(n) + "," + std::to_string(k) +
                               "): [k][2n br n-k] not divisible by [n]");
    return *quo;
}

/// A_{n,k}(q) = q^{n-k}([2k+1]/[2n+1]) [2n+1 br n-k] = [2n br n-k] - [2n br n-k-1],
/// 0 <= k <= n; both sides compared, the difference form is the canonical output.
inline IntPolynomial a_poly_q(long n, long k) {
    if (n < 1) throw DomainError("a_poly_q: n must be positive");
    if (k < 0 || k > n) throw DomainError("a_poly_q: need 0 <= k <= n");
    IntPolynomial diff = q_binomial(2 * n, n - k) - q_binomial(2 * n, n - k - 1);
    auto quo = poly_try_exact_div(q_integer(2 * k + 1) * q_binomial(2 * n + 1, n - k),
                                  q_integer(2 * n + 1));
    if (!quo || !(IntPolynomial::monomial(Int(1), n - k) * *quo == diff))
        throw InternalMismatch("a_poly_q(" + std::to_string(n) + "," + std::to_string(k) +
                               "): the two closed forms disagree");
    return diff;
}

struct TriangleEntry {
    TriangleKind kind;
    long n;
    long k;
    Int value;
};

inline TriangleEntry make_triangle_entry(TriangleKind kind, long n, long k) {
    return TriangleEntry{kind, n, k, triangle_number(kind, n, k)};
}

} // namespace qcat
