#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ivpoly/intpoly.hpp"
#include "ivpoly/poly_text.hpp"
#include "test_util.hpp"

using namespace ivpoly;
using ivtest::rand_int;
using ivtest::rand_poly;

TEST_CASE("degree and normalization") {
    CHECK(IntPoly{}.is_zero());
    CHECK(IntPoly{}.degree() == IntPoly::kZeroDegree);
    CHECK(IntPoly({mpz_class(0), mpz_class(0)}).is_zero());
    CHECK(IntPoly::constant(0).is_zero());
    CHECK(IntPoly::constant(5).degree() == 0);
    CHECK(IntPoly({mpz_class(1), mpz_class(2), mpz_class(0)}).degree() == 1);
}

TEST_CASE("eval") {
    const IntPoly f = parse_poly("2,1,1");  // X^2+X+2
    CHECK(eval(f, 3) == 14);
    CHECK(eval(IntPoly{}, mpz_class("1000000000000000000")) == 0);
    const IntPoly g = IntPoly::from_roots({0, 1, 2});
    CHECK(eval(g, 5) == 60);
}

TEST_CASE("taylor_shift") {
    CHECK(taylor_shift(parse_poly("0,0,1"), 1) == parse_poly("1,2,1"));
    const IntPoly f = rand_poly(9, 50);
    CHECK(taylor_shift(f, 0) == f);
    CHECK(taylor_shift(IntPoly::from_roots({0, 1}), 1) == parse_poly("0,1,1"));   // (X+1)X
    CHECK(taylor_shift(IntPoly::from_roots({0, 1}), -1) == parse_poly("2,-3,1"));  // (X-1)(X-2)
}

TEST_CASE("taylor_shift round trip and eval compatibility") {
    for (int iter = 0; iter < 200; ++iter) {
        const IntPoly f = rand_poly(10, 1000);
        const mpz_class a = rand_int(-30, 30);
        const IntPoly g = taylor_shift(f, a);
        CHECK(taylor_shift(g, -a) == f);
        const mpz_class x = rand_int(-20, 20);
        CHECK(eval(g, x) == eval(f, x + a));
    }
}

TEST_CASE("divmod_monic") {
    auto [q, r] = divmod_monic(parse_poly("2,1,1"), parse_poly("-1,1"));
    CHECK(q == parse_poly("2,1"));
    CHECK(r == IntPoly::constant(4));

    const IntPoly xa = IntPoly::linear_root(7);
    auto [q2, r2] = divmod_monic(xa, xa);
    CHECK(q2 == IntPoly::constant(1));
    CHECK(r2.is_zero());

    auto [q3, r3] = divmod_monic(IntPoly::from_roots({0, 2}), IntPoly::linear_root(2));
    CHECK(q3 == parse_poly("0,1"));
    CHECK(r3.is_zero());

    CHECK_THROWS_AS(divmod_monic(xa, parse_poly("1,2")), std::invalid_argument);
    CHECK_THROWS_AS(divmod_monic(xa, IntPoly{}), std::invalid_argument);
}

TEST_CASE("divmod_monic reconstruction on random inputs") {
    for (int iter = 0; iter < 200; ++iter) {
        const IntPoly f = rand_poly(12, 10000);
        IntPoly g = rand_poly(5, 100);
        // force monic
        std::vector<mpz_class> gc = g.coeffs();
        gc.push_back(1);
        g = IntPoly(std::move(gc));
        auto [q, r] = divmod_monic(f, g);
        CHECK(q * g + r == f);
        CHECK(r.degree() < g.degree());
    }
}

TEST_CASE("ring laws on random triples") {
    for (int iter = 0; iter < 100; ++iter) {
        const IntPoly f = rand_poly(6, 100), g = rand_poly(6, 100), h = rand_poly(6, 100);
        CHECK((f + g) + h == f + (g + h));
        CHECK(f * g == g * f);
        CHECK(f * (g + h) == f * g + f * h);
        const mpz_class x = rand_int(-10, 10);
        CHECK(eval(f * g, x) == eval(f, x) * eval(g, x));
        CHECK(eval(f + g, x) == eval(f, x) + eval(g, x));
    }
}

TEST_CASE("content and primitive part") {
    CHECK(content(parse_poly("6,0,4")) == 2);
    CHECK(primitive_part(parse_poly("6,0,4")) == parse_poly("3,0,2"));
    CHECK(content(parse_poly("0,-1,0,0,0,1")) == 1);  // X^5 - X
    CHECK(content(IntPoly{}) == 0);
    CHECK_THROWS_AS(primitive_part(IntPoly{}), std::invalid_argument);
    for (int iter = 0; iter < 100; ++iter) {
        const IntPoly f = ivtest::rand_nonzero_poly(8, 500);
        CHECK(content(f) * primitive_part(f) == f);
        CHECK(content(primitive_part(f)) == 1);
    }
}

TEST_CASE("valuations") {
    CHECK(valuation(48, 2) == 4);
    CHECK(valuation(-48, 2) == 4);
    CHECK(valuation(7, 2) == 0);
    CHECK_THROWS_AS(valuation(0, 2), std::invalid_argument);
    CHECK(factorial_valuation(0, 5) == 0);
    CHECK(factorial_valuation(4, 2) == 3);  // 4! = 24
    CHECK(pk_factorial_valuation(2, 2) == 3);

    for (std::int64_t p : {2, 3, 5, 7, 11})
        for (unsigned long m = 0; m <= 200; ++m)
            CHECK(pk_factorial_valuation(m, p) == factorial_valuation(p * m, p));
}

TEST_CASE("prime power validation") {
    CHECK_THROWS_AS(PrimePower(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(PrimePower(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(PrimePower(2, 0), std::invalid_argument);
    CHECK(PrimePower(2, 10).modulus() == 1024);
    CHECK(PrimePower(97, 2).modulus() == 9409);
    CHECK(is_prime(2));
    CHECK(is_prime(9973));
    CHECK(!is_prime(9991));  // 97 * 103
}

TEST_CASE("polynomial text round trip") {
    CHECK(parse_poly("2,1,1") == parse_poly("X^2+X+2"));
    CHECK(parse_poly("0,-6,11,-6,1") == IntPoly::from_roots({0, 1, 2, 3}));
    CHECK(parse_poly("x") == parse_poly("0,1"));
    CHECK(parse_poly("-X^3 + 2*X - 5") == parse_poly("-5,2,0,-1"));
    CHECK(parse_poly(" 3 , -4 ") == parse_poly("3,-4"));
    CHECK(emit_poly(parse_poly("2,1,1")) == "2,1,1");
    CHECK(emit_poly(IntPoly{}) == "0");
    CHECK(parse_poly("0") .is_zero());
    CHECK_THROWS_AS(parse_poly("2,,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("X^"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("foo"), std::invalid_argument);
    for (int iter = 0; iter < 50; ++iter) {
        const IntPoly f = rand_poly(10, 1000000);
        CHECK(parse_poly(emit_poly(f)) == f);
    }
}
