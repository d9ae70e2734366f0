#ifndef IVPOLY_PRIMARY_HPP
#define IVPOLY_PRIMARY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ivpoly/intpoly.hpp"

namespace ivpoly {

/// The ideal (p^n, X - a) of Z[X], a reduced into [0, p^n).
/// f lies in it iff p^n divides f(a).
struct ContractionIdeal {
    ContractionIdeal(PrimePower pp_, mpz_class a_);
    PrimePower pp;
    mpz_class a;

    friend bool operator==(const ContractionIdeal& lhs, const ContractionIdeal& rhs) {
        return lhs.pp == rhs.pp && lhs.a == rhs.a;
    }
};

bool contraction_membership(const IntPoly& f, const ContractionIdeal& c);

/// Newton basis element for the p-spaced nodes j, j+p, ..., j+(k-1)p:
/// prod_{h<k} (X - j - h*p). Monic of degree k; k = 0 gives 1.
IntPoly newton_basis(unsigned long k, std::int64_t p, std::int64_t j = 0);

/// Least m with v_p((p*m)!) >= n. Equals n when p >= n, and lies in
/// [p, n) when p < n.
unsigned long cutoff_index(const PrimePower& pp);

/// Scale of the m-th component generator: p^(n - v_p((p*m)!)) for
/// m < cutoff, and 1 at the cutoff. Throws on m out of [0, cutoff].
mpz_class generator_scale(const PrimePower& pp, unsigned long m);

/// A finite generating set of an ideal of Z[X]; provenance records which
/// formula produced each generator.
struct GeneratorSet {
    std::string ideal_label;
    std::vector<IntPoly> gens;
    std::vector<std::string> provenance;  // parallel to gens

    void add(IntPoly g, std::string from);
    /// Drops exact duplicates, keeping the first occurrence.
    void dedup();
};

/// Generators of the primary component Q_{n,j}: the polynomials zero
/// mod p^n on every integer congruent to j mod p.
GeneratorSet component_generators(const PrimePower& pp, std::int64_t j);

/// Coefficients a_k with f = sum_k a_k * newton_basis(k, p, j).
struct NewtonExpansion {
    std::int64_t p = 2;
    std::int64_t j = 0;
    std::vector<mpz_class> coeffs;  // length deg(f) + 1; empty for f = 0
};

NewtonExpansion newton_expand(const IntPoly& f, std::int64_t p, std::int64_t j);

/// sum_k a_k * newton_basis(k, p, j); inverse of newton_expand.
IntPoly newton_reconstruct(const NewtonExpansion& e);

struct CertificateViolation {
    unsigned long k;             // least offending index
    mpz_class required_power;    // p^(n - v_p((p*k)!))
    unsigned long actual_valuation;  // v_p(a_k), finite since a_k != 0
};

/// Constructive membership certificate for f in Q_{n,j}: the Newton
/// coefficients a_k, a verdict, and on rejection the violated
/// divisibility at the least offending index.
struct ComponentCertificate {
    PrimePower pp;
    std::int64_t j;
    NewtonExpansion expansion;
    bool member;
    std::optional<CertificateViolation> violation;
};

ComponentCertificate component_membership(const IntPoly& f, const PrimePower& pp, std::int64_t j);

/// Membership in (p, X-j)^n, decided coefficient-wise on the (X-j)-adic
/// expansion: v_p(c_i) >= n - i for all i < n.
bool maximal_power_membership(const IntPoly& f, const PrimePower& pp, std::int64_t j);

struct IpnResult {
    bool member;
    std::vector<ComponentCertificate> certificates;  // one per j, ascending
};

/// Membership in I_{p^n} = intersection of the components Q_{n,j}.
IpnResult ipn_membership(const IntPoly& f, const PrimePower& pp);

enum class IpnForm { n1, p_ge_n, p_plus_1, product };

IpnForm ipn_special_case(const PrimePower& pp);
const char* ipn_form_name(IpnForm form);

/// Cap on the product expansion: reject when (cutoff+1)^p exceeds this.
inline constexpr std::uint64_t kDefaultProductCap = 100000;

/// Cross products of one generator from each component; generates I_{p^n}
/// since the components are pairwise coprime.
GeneratorSet ipn_product_generators(const PrimePower& pp,
                                    std::uint64_t cap = kDefaultProductCap);

/// Generators of I_{p^n}, using the closed forms where available:
/// n = 1 gives (p, prod(X-j)); p >= n the n-th power of that ideal;
/// n = p+1 that power together with prod_{i<p^2}(X-i); otherwise the
/// product expansion.
GeneratorSet ipn_generators(const PrimePower& pp, std::uint64_t cap = kDefaultProductCap);

/// prod_{j<p} (X - j), the degree-p generator of I_p.
IntPoly full_residue_product(std::int64_t p);

/// prod_{i<p^2} (X - i), the extra generator of I_{p^(p+1)}.
IntPoly square_residue_product(std::int64_t p);

/// Checks H + G_p(X-k) in (p, X-k)^(p+1), where H = prod_{i<p^2}(X-i);
/// true for every k by Wilson's theorem.
bool wilson_residue_check(std::int64_t p, std::int64_t k);

}  // namespace ivpoly

#endif
