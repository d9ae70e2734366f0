#ifndef IVPOLY_FIXDIV_HPP
#define IVPOLY_FIXDIV_HPP

#include <cstdint>
#include <map>
#include <stdexcept>

#include "ivpoly/intpoly.hpp"

namespace ivpoly {

/// d(f) = gcd of all values of f over Z, together with its prime
/// factorization. The extended fixed divisor d(f)*Int(Z) is determined by
/// the value, so it is not stored separately.
struct FixedDivisor {
    mpz_class value;                          // nonnegative; 0 for the zero polynomial
    std::map<mpz_class, unsigned long> p_parts;  // prime -> exponent, product = value
};

/// gcd(f(0), ..., f(deg f)); equal to the gcd over every integer argument.
FixedDivisor fixed_divisor(const IntPoly& f);

/// True iff the values of f have gcd 1.
bool is_image_primitive(const IntPoly& f);

/// v_p(d(f)); equivalently the largest n with f in I_{p^n}.
/// Throws std::invalid_argument on the zero polynomial or composite p.
unsigned long fixed_divisor_p_part(const IntPoly& f, std::int64_t p);

/// F/N with F integral and N a positive integer, normalized so that
/// gcd(content(F), N) = 1 and N divides d(F).
struct IntValuedPoly {
    IntPoly numerator;
    mpz_class denominator;
};

struct NotIntegerValued : std::runtime_error {
    NotIntegerValued(const std::string& msg, mpz_class w)
        : std::runtime_error(msg), witness(std::move(w)) {}
    mpz_class witness;  // argument x in [0, deg F] with N not dividing F(x)
};

/// Accepts iff F(x)/N is an integer for every integer x; on rejection
/// throws NotIntegerValued carrying a witness argument.
IntValuedPoly validate_integer_valued(const IntPoly& F, const mpz_class& N);

}  // namespace ivpoly

#endif
