#pragma once

/**
 * @file integer.hpp
 * @brief Exact unbounded scalars: integers and always-reduced rationals.
 *
 * Everything in this library reduces to arithmetic on these two types.
 * They are aliases of the GMP C++ classes; the helpers below pin down the
 * invariants the rest of the code relies on (canonical rationals, exact
 * division, integer powers).
 */

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "qcat/errors.hpp"

namespace qcat {

using Int = mpz_class;
using Rat = mpq_class;

/// num/den in lowest terms with a positive denominator. den must be nonzero.
inline Rat make_rational(const Int& num, const Int& den) {
    if (den == 0) throw DomainError("make_rational: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

/// Exact integer quotient; throws unless b divides a.
inline Int exact_div(const Int& a, const Int& b) {
    if (b == 0) throw DomainError("exact_div: division by zero");
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw NotDivisible("exact_div: remainder " + r.get_str());
    return q;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

/// x^e for signed e; requires x != 0 when e < 0.
inline Rat rat_pow(const Rat& x, long e) {
    if (e == 0) return Rat(1);
    if (x == 0 && e < 0) throw DomainError("rat_pow: 0 to a negative power");
    unsigned long mag = static_cast<unsigned long>(e < 0 ? -e : e);
    Int num = int_pow(Int(x.get_num()), mag);
    Int den = int_pow(Int(x.get_den()), mag);
    return e > 0 ? make_rational(num, den) : make_rational(den, num);
}

inline std::string to_string(const Int& v) { return v.get_str(); }

/// "n" when integral, "n/d" otherwise.
inline std::string to_string(const Rat& v) {
    if (is_integer(v)) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

} // namespace qcat
