#pragma once

/**
 * @file poly.hpp
 * @brief Dense integer-coefficient polynomials in q and their Laurent extension.
 *
 * IntPolynomial is the universal carrier for q-objects ([n], (q;q)_n,
 * q-binomials, cyclotomics). LaurentPolynomial adds a signed exponent offset
 * and carries quotients and sums with negative q-powers. Both are immutable
 * values in canonical form, so structural equality is semantic equality:
 *   - IntPolynomial: empty coefficient list <=> zero, otherwise the top
 *     coefficient is nonzero;
 *   - LaurentPolynomial: zero has offset 0 and empty body, otherwise the
 *     body has a nonzero constant term.
 *
 * laurent_quotient is the divisibility predicate everything else is built on:
 * P ≡ 0 (mod D) exactly when it returns a value.
 */

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcat/integer.hpp"

namespace qcat {

class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    IntPolynomial(std::initializer_list<long> coeffs) {
        c_.reserve(coeffs.size());
        for (long v : coeffs) c_.emplace_back(v);
        trim();
    }

    static IntPolynomial constant(Int v) {
        std::vector<Int> c;
        if (v != 0) c.push_back(std::move(v));
        return IntPolynomial(std::move(c));
    }

    /// coeff * q^exp, exp >= 0.
    static IntPolynomial monomial(Int coeff, long exp) {
        if (exp < 0) throw DomainError("IntPolynomial::monomial: negative exponent");
        if (coeff == 0) return {};
        std::vector<Int> c(static_cast<size_t>(exp) + 1, Int(0));
        c.back() = std::move(coeff);
        return IntPolynomial(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    /// Lowest exponent with a nonzero coefficient; 0 for the zero polynomial.
    long valuation() const {
        for (size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) return static_cast<long>(i);
        return 0;
    }
    const std::vector<Int>& coeffs() const { return c_; }
    Int coeff(long e) const {
        if (e < 0 || e >= static_cast<long>(c_.size())) return Int(0);
        return c_[static_cast<size_t>(e)];
    }
    Int leading() const { return c_.empty() ? Int(0) : c_.back(); }

    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Int> c_;
};

inline IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Int> c(std::max(a.coeffs().size(), b.coeffs().size()), Int(0));
    for (size_t i = 0; i < a.coeffs().size(); ++i) c[i] = a.coeffs()[i];
    for (size_t i = 0; i < b.coeffs().size(); ++i) c[i] += b.coeffs()[i];
    return IntPolynomial(std::move(c));
}

inline IntPolynomial operator-(const IntPolynomial& a) {
    std::vector<Int> c(a.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = -a.coeffs()[i];
    return IntPolynomial(std::move(c));
}

inline IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    return a + (-b);
}

inline IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> c(a.coeffs().size() + b.coeffs().size() - 1, Int(0));
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] += a.coeffs()[i] * b.coeffs()[j];
    }
    return IntPolynomial(std::move(c));
}

inline IntPolynomial operator*(const Int& s, const IntPolynomial& a) {
    if (s == 0 || a.is_zero()) return {};
    std::vector<Int> c(a.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = s * a.coeffs()[i];
    return IntPolynomial(std::move(c));
}

/// Product of exact integer polynomials; the named form of operator*.
inline IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) { return a * b; }

inline IntPolynomial poly_pow(const IntPolynomial& base, unsigned long e) {
    IntPolynomial acc = IntPolynomial::constant(1);
    IntPolynomial sq = base;
    while (e > 0) {
        if (e & 1) acc = acc * sq;
        e >>= 1;
        if (e > 0) sq = sq * sq;
    }
    return acc;
}

/// Long division over the rationals; a/b when the remainder is zero and the
/// quotient has integer coefficients, std::nullopt otherwise. b must be nonzero.
inline std::optional<IntPolynomial> poly_try_exact_div(const IntPolynomial& a,
                                                       const IntPolynomial& b) {
    if (b.is_zero()) throw DomainError("poly division by zero polynomial");
    if (a.is_zero()) return IntPolynomial{};
    const long da = a.degree(), db = b.degree();
    if (da < db) return std::nullopt;

    std::vector<Rat> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<Rat> quo(static_cast<size_t>(da - db) + 1, Rat(0));
    const Rat lead(b.leading());
    for (long i = da; i >= db; --i) {
        Rat t = rem[static_cast<size_t>(i)] / lead;
        if (t == 0) continue;
        quo[static_cast<size_t>(i - db)] = t;
        for (long j = 0; j <= db; ++j)
            rem[static_cast<size_t>(i - db + j)] -= t * Rat(b.coeffs()[static_cast<size_t>(j)]);
    }
    for (long i = 0; i < db; ++i)
        if (rem[static_cast<size_t>(i)] != 0) return std::nullopt;
    std::vector<Int> out(quo.size());
    for (size_t i = 0; i < quo.size(); ++i) {
        if (!is_integer(quo[i])) return std::nullopt;
        out[i] = quo[i].get_num();
    }
    return IntPolynomial(std::move(out));
}

/// Exact quotient a/b; throws NotDivisible when it does not exist over Z[q].
inline IntPolynomial poly_exact_div(const IntPolynomial& a, const IntPolynomial& b) {
    auto q = poly_try_exact_div(a, b);
    if (!q) throw NotDivisible("poly_exact_div: inexact division");
    return *q;
}

class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    /// q^offset * body, renormalized to canonical form.
    LaurentPolynomial(long offset, IntPolynomial body) {
        if (body.is_zero()) return;
        long v = body.valuation();
        if (v > 0) {
            std::vector<Int> c(body.coeffs().begin() + v, body.coeffs().end());
            body = IntPolynomial(std::move(c));
        }
        offset_ = offset + v;
        body_ = std::move(body);
    }
    LaurentPolynomial(const IntPolynomial& p) : LaurentPolynomial(0, p) {}  // NOLINT: intentional

    bool is_zero() const { return body_.is_zero(); }
    long offset() const { return offset_; }
    const IntPolynomial& body() const { return body_; }
    /// Lowest and highest exponent of the support; (0,0) for zero.
    long low_exponent() const { return offset_; }
    long high_exponent() const { return is_zero() ? 0 : offset_ + body_.degree(); }
    Int coeff(long e) const { return body_.coeff(e - offset_); }
    /// Smallest coefficient over the support; 0 for the zero polynomial.
    Int min_coefficient() const {
        if (is_zero()) return Int(0);
        Int m = body_.coeffs().front();
        for (const Int& c : body_.coeffs())
            if (c != 0 && c < m) m = c;
        return m;
    }

    bool operator==(const LaurentPolynomial& o) const {
        return offset_ == o.offset_ && body_ == o.body_;
    }

private:
    long offset_ = 0;
    IntPolynomial body_;
};

/// The monomial q^e.
inline LaurentPolynomial q_power(long e) {
    return LaurentPolynomial(e, IntPolynomial::constant(1));
}

inline LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    long lo = std::min(a.offset(), b.offset());
    long hi = std::max(a.high_exponent(), b.high_exponent());
    std::vector<Int> c(static_cast<size_t>(hi - lo) + 1, Int(0));
    for (long e = a.offset(); e <= a.high_exponent(); ++e) c[static_cast<size_t>(e - lo)] += a.coeff(e);
    for (long e = b.offset(); e <= b.high_exponent(); ++e) c[static_cast<size_t>(e - lo)] += b.coeff(e);
    return LaurentPolynomial(lo, IntPolynomial(std::move(c)));
}

inline LaurentPolynomial operator-(const LaurentPolynomial& a) {
    return LaurentPolynomial(a.offset(), -a.body());
}

inline LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a + (-b);
}

inline LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return LaurentPolynomial(a.offset() + b.offset(), a.body() * b.body());
}

inline LaurentPolynomial operator*(const Int& s, const LaurentPolynomial& a) {
    return LaurentPolynomial(a.offset(), s * a.body());
}

inline LaurentPolynomial laurent_pow(const LaurentPolynomial& base, unsigned long e) {
    LaurentPolynomial acc = q_power(0);
    LaurentPolynomial sq = base;
    while (e > 0) {
        if (e & 1) acc = acc * sq;
        e >>= 1;
        if (e > 0) sq = sq * sq;
    }
    return acc;
}

/// P(1/q): negates every exponent of the support.
inline LaurentPolynomial laurent_reciprocal(const LaurentPolynomial& p) {
    if (p.is_zero()) return {};
    std::vector<Int> c(p.body().coeffs().rbegin(), p.body().coeffs().rend());
    return LaurentPolynomial(-p.high_exponent(), IntPolynomial(std::move(c)));
}

/// q^d * P(1/q) in canonical Laurent form.
inline LaurentPolynomial poly_reverse(const IntPolynomial& p, long d) {
    return q_power(d) * laurent_reciprocal(LaurentPolynomial(p));
}

/// The "P ≡ 0 (mod D)" predicate: Some(P/D) when the quotient is an
/// integer-coefficient Laurent polynomial, std::nullopt otherwise. D nonzero.
inline std::optional<LaurentPolynomial> laurent_quotient(const LaurentPolynomial& p,
                                                         const IntPolynomial& d) {
    if (d.is_zero()) throw DomainError("laurent_quotient: zero modulus");
    if (p.is_zero()) return LaurentPolynomial{};
    long v = d.valuation();
    IntPolynomial dbody = d;
    if (v > 0) {
        std::vector<Int> c(d.coeffs().begin() + v, d.coeffs().end());
        dbody = IntPolynomial(std::move(c));
    }
    auto q = poly_try_exact_div(p.body(), dbody);
    if (!q) return std::nullopt;
    return LaurentPolynomial(p.offset() - v, std::move(*q));
}

/// Exact evaluation; x must be nonzero when the offset is negative.
inline Rat eval_at(const LaurentPolynomial& p, const Rat& x) {
    if (p.is_zero()) return Rat(0);
    if (x == 0) {
        if (p.offset() < 0)
            throw ZeroAtNegativeOffset("eval_at: pole at x = 0 (offset " +
                                       std::to_string(p.offset()) + ")");
        return p.offset() == 0 ? Rat(p.body().coeffs().front()) : Rat(0);
    }
    Rat acc(0);
    for (auto it = p.body().coeffs().rbegin(); it != p.body().coeffs().rend(); ++it)
        acc = acc * x + Rat(*it);
    return acc * rat_pow(x, p.offset());
}

inline Rat eval_at(const IntPolynomial& p, const Rat& x) {
    return eval_at(LaurentPolynomial(p), x);
}

// ---------------------------------------------------------------------------
// gcd over Q (primitive PRS over Z)

inline Int poly_content(const IntPolynomial& p) {
    Int g(0);
    for (const Int& c : p.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

inline IntPolynomial poly_primitive(const IntPolynomial& p) {
    if (p.is_zero()) return p;
    Int g = poly_content(p);
    if (p.leading() < 0) g = -g;
    if (g == 1) return p;
    std::vector<Int> c(p.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = exact_div(p.coeffs()[i], g);
    return IntPolynomial(std::move(c));
}

/// gcd up to units, returned primitive with positive leading coefficient.
/// Coprimality over Q <=> the result is the constant 1.
inline IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b) {
    a = poly_primitive(a);
    b = poly_primitive(b);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        // fraction-free reduction of a by b, then strip content
        IntPolynomial r = a;
        const Int lb = b.leading();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            IntPolynomial shift = IntPolynomial::monomial(r.leading(), r.degree() - b.degree());
            r = lb * r - shift * b;
        }
        a = b;
        b = poly_primitive(r);
    }
    return poly_primitive(a);
}

// ---------------------------------------------------------------------------
// Canonical text form
//
//   zero            -> "0"
//   offset 0        -> "1 + q - 2*q^3"         (ascending, explicit signs)
//   offset e != 0   -> "q^-6*(1 - q + q^3)"    (body exponents relative to e)

inline std::string to_text(const LaurentPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string body;
    const auto& cs = p.body().coeffs();
    bool first = true;
    for (size_t e = 0; e < cs.size(); ++e) {
        const Int& c = cs[e];
        if (c == 0) continue;
        Int mag = abs(c);
        std::string term;
        if (e == 0) {
            term = mag.get_str();
        } else {
            if (mag != 1) term = mag.get_str() + "*";
            term += (e == 1) ? "q" : "q^" + std::to_string(e);
        }
        if (first) {
            body = (c < 0 ? "-" : "") + term;
            first = false;
        } else {
            body += (c < 0 ? " - " : " + ") + term;
        }
    }
    if (p.offset() == 0) return body;
    return "q^" + std::to_string(p.offset()) + "*(" + body + ")";
}

inline std::string to_text(const IntPolynomial& p) { return to_text(LaurentPolynomial(p)); }

namespace detail {

inline long parse_signed_int(const std::string& s, size_t& i) {
    size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    size_t digits = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') { ++i; ++digits; }
    if (digits == 0) throw UsageError("polynomial text: expected integer at '" + s.substr(start) + "'");
    return std::stol(s.substr(start, i - start));
}

// term := int ["*" qpart] | qpart ; qpart := "q" ["^" int]
inline void parse_term(const std::string& s, size_t& i, bool negative,
                       std::vector<std::pair<long, Int>>& out) {
    Int mag(1);
    bool have_mag = false;
    if (i < s.size() && s[i] >= '0' && s[i] <= '9') {
        size_t start = i;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
        mag = Int(s.substr(start, i - start));
        have_mag = true;
        if (i < s.size() && s[i] == '*') ++i;
        else {
            out.emplace_back(0, negative ? -mag : mag);
            return;
        }
    }
    if (i >= s.size() || s[i] != 'q')
        throw UsageError(have_mag ? "polynomial text: expected q after '*'"
                                  : "polynomial text: expected term");
    ++i;
    long e = 1;
    if (i < s.size() && s[i] == '^') {
        ++i;
        e = parse_signed_int(s, i);
    }
    out.emplace_back(e, negative ? -mag : mag);
}

inline LaurentPolynomial parse_body(const std::string& s, size_t& i, long offset) {
    std::vector<std::pair<long, Int>> terms;
    bool neg = false;
    if (i < s.size() && s[i] == '-') { neg = true; ++i; }
    parse_term(s, i, neg, terms);
    while (i < s.size() && s[i] == ' ') {
        if (i + 2 >= s.size() || (s[i + 1] != '+' && s[i + 1] != '-') || s[i + 2] != ' ')
            throw UsageError("polynomial text: expected ' + ' or ' - '");
        neg = (s[i + 1] == '-');
        i += 3;
        parse_term(s, i, neg, terms);
    }
    long lo = terms.front().first, hi = terms.front().first;
    for (const auto& [e, c] : terms) { lo = std::min(lo, e); hi = std::max(hi, e); }
    std::vector<Int> cs(static_cast<size_t>(hi - lo) + 1, Int(0));
    for (const auto& [e, c] : terms) cs[static_cast<size_t>(e - lo)] += c;
    return LaurentPolynomial(offset + lo, IntPolynomial(std::move(cs)));
}

} // namespace detail

/// Inverse of to_text; throws UsageError on malformed input.
inline LaurentPolynomial parse_text(const std::string& s) {
    if (s == "0") return {};
    size_t i = 0;
    long offset = 0;
    if (!s.empty() && s[0] == 'q' && s.size() > 1 && s[1] == '^') {
        // peek: "q^<int>*(" prefix vs a bare q-power term
        size_t j = 2;
        try {
            long e = detail::parse_signed_int(s, j);
            if (j + 1 < s.size() && s[j] == '*' && s[j + 1] == '(') {
                offset = e;
                i = j + 2;
                auto p = detail::parse_body(s, i, offset);
                if (i >= s.size() || s[i] != ')' || i + 1 != s.size())
                    throw UsageError("polynomial text: expected closing ')'");
                return p;
            }
        } catch (const UsageError&) {
            // fall through to bare-body parse
        }
    }
    auto p = detail::parse_body(s, i, 0);
    if (i != s.size()) throw UsageError("polynomial text: trailing input '" + s.substr(i) + "'");
    return p;
}

} // namespace qcat
