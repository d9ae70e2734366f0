#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ivpoly/fixdiv.hpp"
#include "ivpoly/poly_text.hpp"
#include "test_util.hpp"

using namespace ivpoly;
using ivtest::rand_int;
using ivtest::rand_nonzero_poly;
using ivtest::rand_poly;

TEST_CASE("fixed divisor of falling factorials and small fixtures") {
    CHECK(fixed_divisor(IntPoly::from_roots({0, 1, 2, 3})).value == 24);
    CHECK(fixed_divisor(parse_poly("X^2+X+2")).value == 2);
    CHECK(fixed_divisor(parse_poly("X")).value == 1);
    CHECK(fixed_divisor(parse_poly("3,6")).value == 3);  // 6X+3: gcd(3, 9)
    CHECK(fixed_divisor(IntPoly{}).value == 0);
    CHECK(fixed_divisor(IntPoly::constant(-12)).value == 12);
}

TEST_CASE("fixed divisor factorization") {
    const FixedDivisor d = fixed_divisor(IntPoly::from_roots({0, 1, 2, 3}));
    REQUIRE(d.p_parts.size() == 2);
    CHECK(d.p_parts.at(2) == 3);
    CHECK(d.p_parts.at(3) == 1);
    mpz_class prod = 1;
    for (const auto& [p, e] : d.p_parts)
        for (unsigned long i = 0; i < e; ++i) prod *= p;
    CHECK(prod == d.value);
    CHECK(fixed_divisor(IntPoly{}).p_parts.empty());
}

TEST_CASE("image primitivity") {
    CHECK(!is_image_primitive(parse_poly("X^2+X+2")));
    CHECK(is_image_primitive(parse_poly("X")));
    // gcd(f(0), f(1), f(2)) = gcd(4, 6, 10) = 2
    CHECK(!is_image_primitive(parse_poly("X^2+X+4")));
}

TEST_CASE("p-part") {
    CHECK(fixed_divisor_p_part(IntPoly::from_roots({0, 1, 2, 3}), 2) == 3);
    CHECK(fixed_divisor_p_part(parse_poly("0,-1,0,0,0,1"), 5) == 1);  // X^5 - X
    CHECK(fixed_divisor_p_part(parse_poly("0,-1,1"), 2) == 1);        // X^2 - X
    CHECK(fixed_divisor_p_part(IntPoly::constant(1), 7) == 0);
    CHECK_THROWS_AS(fixed_divisor_p_part(IntPoly{}, 2), std::invalid_argument);
    CHECK_THROWS_AS(fixed_divisor_p_part(parse_poly("X"), 6), std::invalid_argument);
}

TEST_CASE("validate_integer_valued") {
    const IntValuedPoly b2 = validate_integer_valued(IntPoly::from_roots({0, 1}), 2);
    CHECK(b2.denominator == 2);
    CHECK(b2.numerator == IntPoly::from_roots({0, 1}));

    CHECK_THROWS_AS(validate_integer_valued(parse_poly("X"), 2), NotIntegerValued);
    try {
        validate_integer_valued(parse_poly("X"), 2);
    } catch (const NotIntegerValued& e) {
        CHECK(e.witness == 1);
    }

    CHECK_NOTHROW(validate_integer_valued(IntPoly::from_roots({0, 1, 2}), 6));
}

TEST_CASE("validate_integer_valued normalization") {
    // 6X/4: gcd(content, N) = 2, reduced to 3X/2 which is not integer valued
    CHECK_THROWS_AS(validate_integer_valued(parse_poly("0,6"), 4), NotIntegerValued);
    // 6X(X-1)/4 reduces to 3X(X-1)/2, integer valued
    const IntValuedPoly v = validate_integer_valued(mpz_class(6) * IntPoly::from_roots({0, 1}), 4);
    CHECK(v.denominator == 2);
    CHECK(v.numerator == mpz_class(3) * IntPoly::from_roots({0, 1}));
    CHECK(gcd(content(v.numerator), v.denominator) == 1);
    // zero numerator is integer valued for any N
    CHECK_NOTHROW(validate_integer_valued(IntPoly{}, 5));
}

TEST_CASE("scaling and content laws") {
    for (int iter = 0; iter < 100; ++iter) {
        IntPoly f = rand_nonzero_poly(8, 50);
        const mpz_class c = rand_int(1, 40) * (rand_int(0, 1) ? 1 : -1);
        CHECK(fixed_divisor(c * f).value == abs(c) * fixed_divisor(f).value);
        CHECK(fixed_divisor(f).value == content(f) * fixed_divisor(primitive_part(f)).value);
    }
}

TEST_CASE("d(f)d(g) divides d(fg), with a strict witness") {
    for (int iter = 0; iter < 100; ++iter) {
        const IntPoly f = rand_nonzero_poly(6, 30), g = rand_nonzero_poly(6, 30);
        const mpz_class prod = fixed_divisor(f).value * fixed_divisor(g).value;
        CHECK(mpz_divisible_p(fixed_divisor(f * g).value.get_mpz_t(), prod.get_mpz_t()));
    }
    const IntPoly x = parse_poly("X"), xm1 = parse_poly("-1,1");
    CHECK(fixed_divisor(x).value == 1);
    CHECK(fixed_divisor(xm1).value == 1);
    CHECK(fixed_divisor(x * xm1).value == 2);  // strict containment
}

TEST_CASE("prime bound and exponent bound for primitive polynomials") {
    for (int iter = 0; iter < 200; ++iter) {
        IntPoly f = primitive_part(rand_nonzero_poly(10, 200));
        const auto deg = static_cast<unsigned long>(f.degree());
        for (const auto& [p, e] : fixed_divisor(f).p_parts) {
            CHECK(p <= deg);
            CHECK(e <= factorial_valuation(deg, p.get_si()));
        }
    }
}

TEST_CASE("gcd over 0..d stabilizes at 0..2d") {
    for (int iter = 0; iter < 100; ++iter) {
        const IntPoly f = rand_nonzero_poly(9, 1000);
        const int d = f.degree();
        mpz_class g1 = 0, g2 = 0;
        for (int x = 0; x <= 2 * d; ++x) {
            mpz_class v = f(x);
            if (x <= d) mpz_gcd(g1.get_mpz_t(), g1.get_mpz_t(), v.get_mpz_t());
            mpz_gcd(g2.get_mpz_t(), g2.get_mpz_t(), v.get_mpz_t());
        }
        CHECK(g1 == g2);
        CHECK(g1 == fixed_divisor(f).value);
    }
}
