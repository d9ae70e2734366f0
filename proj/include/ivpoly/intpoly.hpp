#ifndef IVPOLY_INTPOLY_HPP
#define IVPOLY_INTPOLY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ivpoly {

/// Dense univariate polynomial over Z, arbitrary-precision coefficients.
/// coeffs()[i] is the coefficient of X^i; the vector never has a trailing
/// zero, and the zero polynomial is the empty vector.
class IntPoly {
public:
    /// degree() of the zero polynomial. Stands in for "minus infinity";
    /// distinct from every real degree (those are >= 0).
    static constexpr int kZeroDegree = -1;

    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static IntPoly constant(mpz_class c);
    /// c * X^k
    static IntPoly monomial(mpz_class c, std::size_t k);
    /// (X - r)
    static IntPoly linear_root(const mpz_class& r);
    /// prod (X - r) over roots
    static IntPoly from_roots(const std::vector<mpz_class>& roots);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of X^i; zero for i beyond the degree.
    const mpz_class& coeff(std::size_t i) const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    /// Leading coefficient; polynomial must be nonzero.
    const mpz_class& leading() const;
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    IntPoly& operator*=(const IntPoly& rhs);
    IntPoly& operator*=(const mpz_class& c);

    friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
    friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
    friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
    friend IntPoly operator*(const mpz_class& c, IntPoly f) { return f *= c; }
    friend IntPoly operator*(IntPoly f, const mpz_class& c) { return f *= c; }
    IntPoly operator-() const;

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

    /// f(x), exact.
    mpz_class operator()(const mpz_class& x) const;

private:
    void normalize();
    std::vector<mpz_class> coeffs_;
};

mpz_class eval(const IntPoly& f, const mpz_class& x);

/// g with g(X) = f(X + a).
IntPoly taylor_shift(const IntPoly& f, const mpz_class& a);

struct DivModResult {
    IntPoly quotient;
    IntPoly remainder;
};

/// Exact Euclidean division by a monic divisor: f = q*g + r, deg r < deg g.
/// Throws std::invalid_argument unless g is monic.
DivModResult divmod_monic(const IntPoly& f, const IntPoly& g);

/// gcd of the coefficients, nonnegative; content(0) = 0.
mpz_class content(const IntPoly& f);

/// f / content(f); throws std::invalid_argument on the zero polynomial.
IntPoly primitive_part(const IntPoly& f);

bool is_prime(std::int64_t p);

/// p-adic valuation of x != 0; throws std::invalid_argument on x = 0.
unsigned long valuation(const mpz_class& x, std::int64_t p);

/// v_p(k!) by Legendre's formula, sum_{i>=1} floor(k / p^i).
unsigned long factorial_valuation(unsigned long k, std::int64_t p);

/// v_p((p*m)!) = m + v_p(m!).
unsigned long pk_factorial_valuation(unsigned long m, std::int64_t p);

/// A prime power p^n, p validated prime by trial division, n >= 1.
class PrimePower {
public:
    PrimePower(std::int64_t p, int n);

    std::int64_t prime() const { return p_; }
    int exponent() const { return n_; }
    const mpz_class& modulus() const { return modulus_; }

    friend bool operator==(const PrimePower& a, const PrimePower& b) {
        return a.p_ == b.p_ && a.n_ == b.n_;
    }

private:
    std::int64_t p_;
    int n_;
    mpz_class modulus_;
};

}  // namespace ivpoly

#endif
