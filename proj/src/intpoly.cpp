#include "ivpoly/intpoly.hpp"

#include <stdexcept>
#include <utility>

namespace ivpoly {

namespace {
const mpz_class kZero = 0;
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::constant(mpz_class c) {
    std::vector<mpz_class> v;
    if (c != 0) v.push_back(std::move(c));
    return IntPoly(std::move(v));
}

IntPoly IntPoly::monomial(mpz_class c, std::size_t k) {
    if (c == 0) return IntPoly{};
    std::vector<mpz_class> v(k + 1);
    v[k] = std::move(c);
    return IntPoly(std::move(v));
}

IntPoly IntPoly::linear_root(const mpz_class& r) {
    return IntPoly({-r, 1});
}

IntPoly IntPoly::from_roots(const std::vector<mpz_class>& roots) {
    IntPoly g = constant(1);
    for (const auto& r : roots) g *= linear_root(r);
    return g;
}

const mpz_class& IntPoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const mpz_class& IntPoly::leading() const {
    if (coeffs_.empty()) throw std::invalid_argument("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return IntPoly{};
    std::vector<mpz_class> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

IntPoly& IntPoly::operator*=(const mpz_class& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
}

IntPoly IntPoly::operator-() const {
    IntPoly out = *this;
    for (auto& a : out.coeffs_) a = -a;
    return out;
}

mpz_class IntPoly::operator()(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

mpz_class eval(const IntPoly& f, const mpz_class& x) { return f(x); }

IntPoly taylor_shift(const IntPoly& f, const mpz_class& a) {
    if (f.is_zero() || a == 0) return f;
    std::vector<mpz_class> c = f.coeffs();
    const std::size_t m = c.size() - 1;
    // in-place synthetic shift: after pass i, c holds the expansion of f
    // around a up to index i
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = m - 1; j + 1 > i; --j) c[j] += a * c[j + 1];
    return IntPoly(std::move(c));
}

DivModResult divmod_monic(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero() || !g.is_monic())
        throw std::invalid_argument("divmod_monic: divisor must be monic");
    const int dg = g.degree();
    const int df = f.degree();
    if (df < dg) return {IntPoly{}, f};
    std::vector<mpz_class> r = f.coeffs();
    std::vector<mpz_class> q(static_cast<std::size_t>(df - dg) + 1);
    for (int k = df - dg; k >= 0; --k) {
        mpz_class c = std::move(r[k + dg]);
        r[k + dg] = 0;
        if (c != 0)
            for (int i = 0; i < dg; ++i) r[k + i] -= c * g.coeff(i);
        q[k] = std::move(c);
    }
    r.resize(dg);
    return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

mpz_class content(const IntPoly& f) {
    mpz_class g = 0;
    for (const auto& c : f.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly primitive_part(const IntPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("primitive_part of the zero polynomial");
    const mpz_class c = content(f);
    std::vector<mpz_class> out;
    out.reserve(f.coeffs().size());
    for (const auto& a : f.coeffs()) out.push_back(a / c);
    return IntPoly(std::move(out));
}

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    if (p < 4) return true;
    if (p % 2 == 0) return false;
    for (std::int64_t d = 3; d <= p / d; d += 2)
        if (p % d == 0) return false;
    return true;
}

unsigned long valuation(const mpz_class& x, std::int64_t p) {
    if (x == 0) throw std::invalid_argument("valuation of 0 is infinite");
    mpz_class rest;
    const mpz_class pz = p;
    return mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t());
}

unsigned long factorial_valuation(unsigned long k, std::int64_t p) {
    unsigned long s = 0;
    const auto q = static_cast<unsigned long>(p);
    while (k > 0) {
        k /= q;
        s += k;
    }
    return s;
}

unsigned long pk_factorial_valuation(unsigned long m, std::int64_t p) {
    return m + factorial_valuation(m, p);
}

PrimePower::PrimePower(std::int64_t p, int n) : p_(p), n_(n) {
    if (!is_prime(p)) throw std::invalid_argument("PrimePower: p must be prime");
    if (n < 1) throw std::invalid_argument("PrimePower: n must be >= 1");
    mpz_class base = p;
    mpz_pow_ui(modulus_.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(n));
}

}  // namespace ivpoly
