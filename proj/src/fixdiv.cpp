#include "ivpoly/fixdiv.hpp"

#include <utility>

#include "ivpoly/poly_text.hpp"

namespace ivpoly {

namespace {

std::map<mpz_class, unsigned long> factorize(mpz_class n) {
    std::map<mpz_class, unsigned long> out;
    if (n <= 1) return out;
    auto strip = [&](const mpz_class& d) {
        unsigned long e = 0;
        while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
            n /= d;
            ++e;
        }
        if (e) out[d] = e;
    };
    strip(2);
    mpz_class d = 3;
    while (d * d <= n) {
        // values here are gcds of a handful of evaluations; once the
        // cofactor certifies prime we can stop dividing
        if (mpz_probab_prime_p(n.get_mpz_t(), 40)) break;
        strip(d);
        d += 2;
    }
    if (n > 1) out[n] += 1;
    return out;
}

}  // namespace

FixedDivisor fixed_divisor(const IntPoly& f) {
    FixedDivisor d;
    d.value = 0;
    if (f.is_zero()) return d;
    const int deg = f.degree();
    for (int x = 0; x <= deg; ++x) {
        mpz_class v = f(x);
        mpz_gcd(d.value.get_mpz_t(), d.value.get_mpz_t(), v.get_mpz_t());
        if (d.value == 1) break;
    }
    d.p_parts = factorize(d.value);
    return d;
}

bool is_image_primitive(const IntPoly& f) { return fixed_divisor(f).value == 1; }

unsigned long fixed_divisor_p_part(const IntPoly& f, std::int64_t p) {
    if (f.is_zero())
        throw std::invalid_argument("fixed_divisor_p_part: zero polynomial has no p-part");
    if (!is_prime(p)) throw std::invalid_argument("fixed_divisor_p_part: p must be prime");
    mpz_class g = 0;
    const mpz_class pz = p;
    for (int x = 0; x <= f.degree(); ++x) {
        mpz_class v = f(x);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (!mpz_divisible_p(g.get_mpz_t(), pz.get_mpz_t())) return 0;
    }
    return valuation(g, p);
}

IntValuedPoly validate_integer_valued(const IntPoly& F, const mpz_class& N) {
    if (N <= 0) throw std::invalid_argument("validate_integer_valued: N must be positive");
    // F/N maps Z into Z iff N divides gcd(F(0),...,F(deg F))
    const int deg = F.is_zero() ? 0 : F.degree();
    mpz_class g = 0;
    for (int x = 0; x <= deg; ++x) {
        mpz_class v = F(x);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    if (!(g == 0) && !mpz_divisible_p(g.get_mpz_t(), N.get_mpz_t())) {
        for (int x = 0; x <= deg; ++x) {
            mpz_class v = F(x);
            if (!mpz_divisible_p(v.get_mpz_t(), N.get_mpz_t()))
                throw NotIntegerValued(
                    "not integer-valued: " + emit_poly(F) + " at x=" + mpz_class(x).get_str() +
                        " gives " + v.get_str() + ", not divisible by " + N.get_str(),
                    x);
        }
    }
    // normalize away the common factor of the content and the denominator
    mpz_class c = content(F);
    mpz_class common;
    mpz_gcd(common.get_mpz_t(), c.get_mpz_t(), N.get_mpz_t());
    IntValuedPoly out;
    if (common > 1) {
        std::vector<mpz_class> reduced;
        reduced.reserve(F.coeffs().size());
        for (const auto& a : F.coeffs()) reduced.push_back(a / common);
        out.numerator = IntPoly(std::move(reduced));
        out.denominator = N / common;
    } else {
        out.numerator = F;
        out.denominator = N;
    }
    return out;
}

}  // namespace ivpoly
