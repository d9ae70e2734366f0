#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ivpoly/poly_text.hpp"
#include "ivpoly/primary.hpp"
#include "ivpoly/semantic.hpp"
#include "test_util.hpp"

using namespace ivpoly;
using ivtest::rand_int;
using ivtest::rand_poly;

TEST_CASE("semantic membership fixtures") {
    CHECK(semantic_membership(IntPoly::from_roots({0, 1, 2, 3}), PrimePower(2, 3)));
    CHECK(semantic_membership(mpz_class(2) * IntPoly::from_roots({0, 1}), PrimePower(2, 2)));
    for (const auto& [p, n] : std::vector<std::pair<std::int64_t, int>>{{2, 1}, {2, 4}, {3, 2}, {7, 1}}) {
        const PrimePower pp(p, n);
        mpz_class below = pp.modulus() / p;
        CHECK(!semantic_membership(IntPoly::constant(below), pp));
    }
}

TEST_CASE("component fixtures and failure witnesses") {
    const PrimePower two3(2, 3);
    CHECK(semantic_component_membership(parse_poly("0,-2,1"), two3, 0));
    CHECK(!semantic_component_membership(parse_poly("0,-2,1"), two3, 1));
    const auto w = semantic_failure_witness(parse_poly("0,-2,1"), two3, 1);
    REQUIRE(w.has_value());
    CHECK(*w == 1);
    CHECK(semantic_component_membership(mpz_class(8) * IntPoly::monomial(1, 5), two3, 1));

    // witness is the least failing residue
    const auto w2 = semantic_failure_witness(IntPoly::constant(4), two3);
    REQUIRE(w2.has_value());
    CHECK(*w2 == 0);
}

TEST_CASE("parallel kernel agrees with the serial reference") {
    for (int iter = 0; iter < 300; ++iter) {
        const std::int64_t p = std::vector<std::int64_t>{2, 3, 5}[rand_int(0, 2)];
        const int n = static_cast<int>(rand_int(1, p == 5 ? 4 : 6));
        const PrimePower pp(p, n);
        IntPoly f = rand_poly(10, 1 << 12);
        // make members common enough to exercise full scans
        if (rand_int(0, 2) == 0) f = pp.modulus() * f;
        if (rand_int(0, 3) == 0) f = f * full_residue_product(p);
        CHECK(semantic_membership(f, pp) == semantic_membership_serial(f, pp));
        const std::int64_t j = rand_int(0, p - 1);
        CHECK(semantic_failure_witness(f, pp, j) == semantic_failure_witness_serial(f, pp, j));
    }
}

TEST_CASE("membership is the conjunction over components") {
    for (int iter = 0; iter < 200; ++iter) {
        const std::int64_t p = std::vector<std::int64_t>{2, 3, 5}[rand_int(0, 2)];
        const int n = static_cast<int>(rand_int(1, 4));
        const PrimePower pp(p, n);
        IntPoly f = rand_poly(9, 4096);
        if (rand_int(0, 2) == 0) f = pp.modulus() * f;
        bool all = true;
        for (std::int64_t j = 0; j < p; ++j) all = all && semantic_component_membership(f, pp, j);
        CHECK(all == semantic_membership(f, pp));
    }
}

TEST_CASE("values are periodic mod p^n") {
    for (int iter = 0; iter < 200; ++iter) {
        const std::int64_t p = std::vector<std::int64_t>{2, 3, 5, 7}[rand_int(0, 3)];
        const int n = static_cast<int>(rand_int(1, 5));
        const PrimePower pp(p, n);
        const IntPoly f = rand_poly(10, 1 << 16);
        const mpz_class i = rand_int(-1000, 1000);
        mpz_class diff = f(i + pp.modulus()) - f(i);
        CHECK(mpz_divisible_p(diff.get_mpz_t(), pp.modulus().get_mpz_t()));
    }
}

TEST_CASE("certificate verdicts agree with the semantic oracle") {
    // a slice of the acceptance sweep, kept fast for unit runs
    for (const auto& [p, n] : std::vector<std::pair<std::int64_t, int>>{{2, 3}, {2, 5}, {3, 2}, {3, 4}, {5, 2}}) {
        const PrimePower pp(p, n);
        const std::int64_t bound = mpz_get_si(pp.modulus().get_mpz_t());
        for (int iter = 0; iter < 120; ++iter) {
            IntPoly f = rand_poly(12, bound);
            if (rand_int(0, 2) == 0) {
                const GeneratorSet gens = component_generators(pp, rand_int(0, p - 1));
                f = gens.gens[rand_int(0, static_cast<std::int64_t>(gens.gens.size()) - 1)] * rand_poly(4, 16);
            }
            for (std::int64_t j = 0; j < p; ++j)
                CHECK(component_membership(f, pp, j).member == semantic_component_membership(f, pp, j));
        }
    }
}
