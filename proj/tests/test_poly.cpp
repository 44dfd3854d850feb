#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qcat/poly.hpp"

using namespace qcat;

namespace {

std::mt19937 rng(424242);

IntPolynomial random_poly(int max_deg = 6, int max_coeff = 9) {
    std::uniform_int_distribution<int> deg_dist(0, max_deg);
    std::uniform_int_distribution<int> coeff_dist(-max_coeff, max_coeff);
    int d = deg_dist(rng);
    std::vector<Int> c;
    c.reserve(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) c.emplace_back(coeff_dist(rng));
    return IntPolynomial(std::move(c));
}

IntPolynomial random_nonzero_poly(int max_deg = 6, int max_coeff = 9) {
    for (;;) {
        auto p = random_poly(max_deg, max_coeff);
        if (!p.is_zero()) return p;
    }
}

LaurentPolynomial random_laurent(int max_deg = 6, int max_coeff = 9) {
    std::uniform_int_distribution<int> off_dist(-6, 6);
    return q_power(off_dist(rng)) * LaurentPolynomial(random_poly(max_deg, max_coeff));
}

} // namespace

TEST_CASE("poly_mul basics") {
    IntPolynomial one_plus_q{1, 1};
    IntPolynomial one_minus_q{1, -1};
    CHECK(poly_mul(one_plus_q, one_minus_q) == IntPolynomial{1, 0, -1});
    CHECK(poly_mul(IntPolynomial{}, IntPolynomial{1, 1, 1}) == IntPolynomial{});
    // (1+q)^2 (1+q^2)
    CHECK(poly_mul(poly_mul(one_plus_q, one_plus_q), IntPolynomial{1, 0, 1}) ==
          IntPolynomial{1, 2, 2, 2, 1});
}

TEST_CASE("poly_exact_div") {
    CHECK(poly_exact_div(IntPolynomial{1, 0, -1}, IntPolynomial{1, -1}) == IntPolynomial{1, 1});
    // (q^5+q^4+1)/(q^2+q+1) = q^3-q+1, re-expanded
    IntPolynomial num{1, 0, 0, 0, 1, 1};
    IntPolynomial den{1, 1, 1};
    IntPolynomial quo = poly_exact_div(num, den);
    CHECK(quo == IntPolynomial{1, -1, 0, 1});
    CHECK(quo * den == num);
    CHECK_THROWS_AS(poly_exact_div(IntPolynomial{1, 0, 1}, IntPolynomial{1, 1}), NotDivisible);
    CHECK_THROWS_AS(poly_exact_div(IntPolynomial{1}, IntPolynomial{}), DomainError);
}

TEST_CASE("laurent_quotient") {
    LaurentPolynomial p = q_power(-1) * LaurentPolynomial(IntPolynomial{1, 0, 1});
    auto quo = laurent_quotient(p, IntPolynomial{1, 0, 1});
    REQUIRE(quo.has_value());
    CHECK(*quo == q_power(-1));

    CHECK(laurent_quotient(LaurentPolynomial{}, IntPolynomial{1, 1}) == LaurentPolynomial{});
    CHECK(!laurent_quotient(LaurentPolynomial(IntPolynomial{1, 1}), IntPolynomial{1, 1, 1})
               .has_value());
    CHECK_THROWS_AS(laurent_quotient(p, IntPolynomial{}), DomainError);

    // modulus with a q-power factor
    auto shifted = laurent_quotient(LaurentPolynomial(IntPolynomial{0, 1, 1}),
                                    IntPolynomial{0, 0, 1});
    REQUIRE(shifted.has_value());
    CHECK(*shifted == q_power(-1) * LaurentPolynomial(IntPolynomial{1, 1}));
}

TEST_CASE("poly_reverse") {
    CHECK(poly_reverse(IntPolynomial{1, 1}, 1) == LaurentPolynomial(IntPolynomial{1, 1}));
    LaurentPolynomial r = poly_reverse(IntPolynomial{1, 2}, 0);
    CHECK(r.offset() == -1);
    CHECK(r.body() == IntPolynomial{2, 1});
    CHECK(poly_reverse(IntPolynomial{0, 0, 1}, 2) == q_power(0));
    CHECK(poly_reverse(IntPolynomial{}, 3) == LaurentPolynomial{});
}

TEST_CASE("eval_at") {
    CHECK(eval_at(IntPolynomial{1, 1, 1}, Rat(1)) == 3);
    CHECK(eval_at(q_power(-1) * LaurentPolynomial(IntPolynomial{1, 0, 1}), Rat(1)) == 2);
    CHECK_THROWS_AS(eval_at(q_power(-1), Rat(0)), ZeroAtNegativeOffset);
    CHECK(eval_at(LaurentPolynomial(IntPolynomial{7, 1}), Rat(0)) == 7);
    CHECK(eval_at(q_power(3), Rat(0)) == 0);
    CHECK(eval_at(IntPolynomial{1, 2, 1}, make_rational(Int(-1), Int(2))) ==
          make_rational(Int(1), Int(4)));
}

TEST_CASE("canonical forms") {
    CHECK(LaurentPolynomial(5, IntPolynomial{}) == LaurentPolynomial{});
    LaurentPolynomial p(2, IntPolynomial{0, 0, 3, 1});  // q^2 * (3q^2 + q^3)
    CHECK(p.offset() == 4);
    CHECK(p.body() == IntPolynomial{3, 1});
    CHECK(LaurentPolynomial{}.offset() == 0);
    CHECK(LaurentPolynomial{}.min_coefficient() == 0);
    // addition that cancels down to zero renormalizes
    CHECK(p - p == LaurentPolynomial{});
}

TEST_CASE("ring laws on random polynomials") {
    for (int it = 0; it < 200; ++it) {
        IntPolynomial a = random_poly(), b = random_poly(), c = random_poly();
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
    }
    for (int it = 0; it < 100; ++it) {
        LaurentPolynomial a = random_laurent(), b = random_laurent(), c = random_laurent();
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("quotients re-expand exactly") {
    for (int it = 0; it < 200; ++it) {
        LaurentPolynomial a = random_laurent();
        IntPolynomial d = random_nonzero_poly();
        LaurentPolynomial p = a * LaurentPolynomial(d);
        auto quo = laurent_quotient(p, d);
        REQUIRE(quo.has_value());
        CHECK(*quo == a);
        CHECK(*quo * LaurentPolynomial(d) == p);
    }
    // and every successful quotient re-expands, divisible or not by design
    for (int it = 0; it < 200; ++it) {
        LaurentPolynomial p = random_laurent();
        IntPolynomial d = random_nonzero_poly(3, 4);
        auto quo = laurent_quotient(p, d);
        if (quo) CHECK(*quo * LaurentPolynomial(d) == p);
    }
}

TEST_CASE("reverse is an involution on polynomials with nonzero constant term") {
    for (int it = 0; it < 200; ++it) {
        IntPolynomial p = random_nonzero_poly();
        if (p.coeff(0) == 0) continue;
        long d = p.degree();
        LaurentPolynomial once = poly_reverse(p, d);
        CHECK(once.offset() == 0);
        LaurentPolynomial twice = poly_reverse(once.body(), d);
        CHECK(twice == LaurentPolynomial(p));
    }
}

TEST_CASE("evaluation is multiplicative") {
    std::uniform_int_distribution<int> num_dist(-5, 5);
    std::uniform_int_distribution<int> den_dist(1, 5);
    for (int it = 0; it < 200; ++it) {
        IntPolynomial a = random_poly(), b = random_poly();
        Rat x = make_rational(Int(num_dist(rng)), Int(den_dist(rng)));
        if (x == 0) x = Rat(2);
        CHECK(eval_at(poly_mul(a, b), x) == eval_at(a, x) * eval_at(b, x));
    }
}

TEST_CASE("polynomial gcd over Q") {
    IntPolynomial one_plus_q{1, 1};
    CHECK(poly_gcd(IntPolynomial{1, 1, 1}, one_plus_q) == IntPolynomial{1});
    CHECK(poly_gcd(one_plus_q * IntPolynomial{1, 0, 1}, one_plus_q * IntPolynomial{1, 1, 1}) ==
          one_plus_q);
    CHECK(poly_gcd(IntPolynomial{}, IntPolynomial{0, 2, 2}) == IntPolynomial{0, 1, 1});
    CHECK(poly_gcd(IntPolynomial{-2, -2}, IntPolynomial{}) == IntPolynomial{1, 1});
    for (int it = 0; it < 50; ++it) {
        IntPolynomial g = random_nonzero_poly(3, 3);
        IntPolynomial a = g * random_nonzero_poly(3, 3);
        IntPolynomial b = g * random_nonzero_poly(3, 3);
        IntPolynomial got = poly_gcd(a, b);
        // gcd divides both inputs and contains the planted common factor
        CHECK(poly_try_exact_div(a, got).has_value());
        CHECK(poly_try_exact_div(b, got).has_value());
        CHECK(poly_try_exact_div(got, poly_primitive(g)).has_value());
    }
}

TEST_CASE("text round trip on fixed forms") {
    CHECK(to_text(LaurentPolynomial{}) == "0");
    CHECK(to_text(LaurentPolynomial(IntPolynomial{1, 1})) == "1 + q");
    CHECK(to_text(LaurentPolynomial(IntPolynomial{1, -1, 0, 2})) == "1 - q + 2*q^3");
    CHECK(to_text(q_power(-6) * LaurentPolynomial(IntPolynomial{1, -1, 0, 1})) ==
          "q^-6*(1 - q + q^3)");
    CHECK(to_text(q_power(2)) == "q^2*(1)");
    CHECK(parse_text("0") == LaurentPolynomial{});
    CHECK(parse_text("1 + q") == LaurentPolynomial(IntPolynomial{1, 1}));
    CHECK(parse_text("q^-6*(1 - q + q^3)") ==
          q_power(-6) * LaurentPolynomial(IntPolynomial{1, -1, 0, 1}));
    CHECK(parse_text("q^2*(1)") == q_power(2));
    CHECK(parse_text("-3") == LaurentPolynomial(IntPolynomial{-3}));
    CHECK_THROWS_AS(parse_text("1 ++ q"), UsageError);
    CHECK_THROWS_AS(parse_text("q^"), UsageError);
    CHECK_THROWS_AS(parse_text(""), UsageError);
}

TEST_CASE("text round trip on random Laurent polynomials") {
    for (int it = 0; it < 300; ++it) {
        LaurentPolynomial p = random_laurent(8, 20);
        CHECK(parse_text(to_text(p)) == p);
    }
}
