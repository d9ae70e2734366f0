#include "ivpoly/primary.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace ivpoly {

namespace {

void check_residue(std::int64_t j, std::int64_t p) {
    if (j < 0 || j >= p) throw std::invalid_argument("residue j must lie in [0, p)");
}

std::string label_for(const PrimePower& pp, std::int64_t j) {
    return "Q[p=" + std::to_string(pp.prime()) + ",n=" + std::to_string(pp.exponent()) +
           ",j=" + std::to_string(j) + "]";
}

std::string ipn_label(const PrimePower& pp) {
    return "I[" + std::to_string(pp.prime()) + "^" + std::to_string(pp.exponent()) + "]";
}

}  // namespace

ContractionIdeal::ContractionIdeal(PrimePower pp_, mpz_class a_) : pp(std::move(pp_)), a(std::move(a_)) {
    mpz_fdiv_r(a.get_mpz_t(), a.get_mpz_t(), pp.modulus().get_mpz_t());
}

bool contraction_membership(const IntPoly& f, const ContractionIdeal& c) {
    mpz_class v = f(c.a);
    return mpz_divisible_p(v.get_mpz_t(), c.pp.modulus().get_mpz_t()) != 0;
}

IntPoly newton_basis(unsigned long k, std::int64_t p, std::int64_t j) {
    check_residue(j, p);
    IntPoly g = IntPoly::constant(1);
    for (unsigned long h = 0; h < k; ++h)
        g *= IntPoly::linear_root(mpz_class(j) + mpz_class(p) * static_cast<unsigned long>(h));
    return g;
}

unsigned long cutoff_index(const PrimePower& pp) {
    const auto n = static_cast<unsigned long>(pp.exponent());
    unsigned long m = 0;
    while (pk_factorial_valuation(m, pp.prime()) < n) ++m;
    return m;
}

mpz_class generator_scale(const PrimePower& pp, unsigned long m) {
    const unsigned long mbar = cutoff_index(pp);
    if (m > mbar) throw std::invalid_argument("generator_scale: m must lie in [0, cutoff]");
    if (m == mbar) return 1;
    const auto n = static_cast<unsigned long>(pp.exponent());
    const unsigned long v = pk_factorial_valuation(m, pp.prime());
    mpz_class out;
    const mpz_class base = pp.prime();
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), n - v);
    return out;
}

void GeneratorSet::add(IntPoly g, std::string from) {
    gens.push_back(std::move(g));
    provenance.push_back(std::move(from));
}

void GeneratorSet::dedup() {
    std::vector<IntPoly> kept;
    std::vector<std::string> kept_from;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (std::find(kept.begin(), kept.end(), gens[i]) == kept.end()) {
            kept.push_back(gens[i]);
            kept_from.push_back(provenance[i]);
        }
    }
    gens = std::move(kept);
    provenance = std::move(kept_from);
}

GeneratorSet component_generators(const PrimePower& pp, std::int64_t j) {
    check_residue(j, pp.prime());
    GeneratorSet out;
    out.ideal_label = label_for(pp, j);
    const unsigned long mbar = cutoff_index(pp);
    for (unsigned long m = 0; m <= mbar; ++m) {
        IntPoly g = generator_scale(pp, m) * newton_basis(m, pp.prime(), j);
        out.add(std::move(g), "scale(" + std::to_string(m) + ")*newton_basis(" + std::to_string(m) + ")");
    }
    return out;
}

NewtonExpansion newton_expand(const IntPoly& f, std::int64_t p, std::int64_t j) {
    check_residue(j, p);
    NewtonExpansion e;
    e.p = p;
    e.j = j;
    if (f.is_zero()) return e;
    e.coeffs.reserve(static_cast<std::size_t>(f.degree()) + 1);
    IntPoly cur = f;
    // synthetic division at the nodes j, j+p, j+2p, ... in that order;
    // the remainder at node k is the coefficient a_k
    for (unsigned long k = 0; !cur.is_zero(); ++k) {
        const mpz_class node = mpz_class(j) + mpz_class(p) * k;
        auto [q, r] = divmod_monic(cur, IntPoly::linear_root(node));
        e.coeffs.push_back(r.is_zero() ? mpz_class(0) : r.coeff(0));
        cur = std::move(q);
    }
    return e;
}

IntPoly newton_reconstruct(const NewtonExpansion& e) {
    // Horner over the node sequence, highest coefficient first:
    // acc_k = acc_{k+1} * (X - node_k) + a_k
    IntPoly acc;
    for (std::size_t k = e.coeffs.size(); k-- > 0;) {
        const mpz_class node = mpz_class(e.j) + mpz_class(e.p) * static_cast<unsigned long>(k);
        acc = acc * IntPoly::linear_root(node) + IntPoly::constant(e.coeffs[k]);
    }
    return acc;
}

ComponentCertificate component_membership(const IntPoly& f, const PrimePower& pp, std::int64_t j) {
    ComponentCertificate cert{pp, j, newton_expand(f, pp.prime(), j), true, std::nullopt};
    const unsigned long mbar = cutoff_index(pp);
    const auto n = static_cast<unsigned long>(pp.exponent());
    const std::size_t upto = std::min<std::size_t>(mbar, cert.expansion.coeffs.size());
    for (std::size_t k = 0; k < upto; ++k) {
        const unsigned long v = pk_factorial_valuation(k, pp.prime());
        if (v >= n) continue;
        const mpz_class& a = cert.expansion.coeffs[k];
        if (a == 0) continue;
        mpz_class need;
        const mpz_class base = pp.prime();
        mpz_pow_ui(need.get_mpz_t(), base.get_mpz_t(), n - v);
        if (!mpz_divisible_p(a.get_mpz_t(), need.get_mpz_t())) {
            cert.member = false;
            cert.violation = CertificateViolation{static_cast<unsigned long>(k), need,
                                                  valuation(a, pp.prime())};
            break;
        }
    }
    return cert;
}

bool maximal_power_membership(const IntPoly& f, const PrimePower& pp, std::int64_t j) {
    check_residue(j, pp.prime());
    if (f.is_zero()) return true;
    const IntPoly shifted = taylor_shift(f, j);  // coefficients of f in powers of (X - j)
    const auto n = static_cast<unsigned long>(pp.exponent());
    for (unsigned long i = 0; i < n; ++i) {
        const mpz_class& c = shifted.coeff(i);
        if (c == 0) continue;
        if (valuation(c, pp.prime()) < n - i) return false;
    }
    return true;
}

IpnResult ipn_membership(const IntPoly& f, const PrimePower& pp) {
    IpnResult out{true, {}};
    out.certificates.reserve(static_cast<std::size_t>(pp.prime()));
    for (std::int64_t j = 0; j < pp.prime(); ++j) {
        out.certificates.push_back(component_membership(f, pp, j));
        if (!out.certificates.back().member) out.member = false;
    }
    return out;
}

IpnForm ipn_special_case(const PrimePower& pp) {
    if (pp.exponent() == 1) return IpnForm::n1;
    if (pp.prime() >= pp.exponent()) return IpnForm::p_ge_n;
    if (pp.exponent() == pp.prime() + 1) return IpnForm::p_plus_1;
    return IpnForm::product;
}

const char* ipn_form_name(IpnForm form) {
    switch (form) {
        case IpnForm::n1: return "n1";
        case IpnForm::p_ge_n: return "p_ge_n";
        case IpnForm::p_plus_1: return "p_plus_1";
        case IpnForm::product: return "product";
    }
    return "?";
}

IntPoly full_residue_product(std::int64_t p) {
    std::vector<mpz_class> roots;
    for (std::int64_t j = 0; j < p; ++j) roots.emplace_back(j);
    return IntPoly::from_roots(roots);
}

IntPoly square_residue_product(std::int64_t p) {
    std::vector<mpz_class> roots;
    for (std::int64_t i = 0; i < p * p; ++i) roots.emplace_back(i);
    return IntPoly::from_roots(roots);
}

GeneratorSet ipn_product_generators(const PrimePower& pp, std::uint64_t cap) {
    const std::int64_t p = pp.prime();
    const unsigned long mbar = cutoff_index(pp);
    double size = 1;
    for (std::int64_t j = 0; j < p; ++j) size *= static_cast<double>(mbar + 1);
    if (size > static_cast<double>(cap))
        throw std::invalid_argument("product expansion too large: (cutoff+1)^p = " +
                                    std::to_string(size) + " exceeds cap " + std::to_string(cap));

    std::vector<GeneratorSet> comps;
    for (std::int64_t j = 0; j < p; ++j) comps.push_back(component_generators(pp, j));

    GeneratorSet out;
    out.ideal_label = ipn_label(pp);
    std::vector<std::size_t> pick(static_cast<std::size_t>(p), 0);
    while (true) {
        IntPoly g = IntPoly::constant(1);
        std::string from = "product";
        for (std::size_t j = 0; j < pick.size(); ++j) {
            g *= comps[j].gens[pick[j]];
            from += "[" + std::to_string(pick[j]) + "]";
        }
        out.add(std::move(g), std::move(from));
        std::size_t carry = 0;
        while (carry < pick.size() && ++pick[carry] > mbar) {
            pick[carry] = 0;
            ++carry;
        }
        if (carry == pick.size()) break;
    }
    out.dedup();
    return out;
}

GeneratorSet ipn_generators(const PrimePower& pp, std::uint64_t cap) {
    const std::int64_t p = pp.prime();
    const int n = pp.exponent();
    GeneratorSet out;
    out.ideal_label = ipn_label(pp);
    const IpnForm form = ipn_special_case(pp);
    switch (form) {
        case IpnForm::n1:
            out.add(IntPoly::constant(p), "p");
            out.add(full_residue_product(p), "prod(X-j)");
            break;
        case IpnForm::p_ge_n:
        case IpnForm::p_plus_1: {
            // the n-th power of (p, prod(X-j)) expands binomially
            const IntPoly b = full_residue_product(p);
            IntPoly bk = IntPoly::constant(1);
            for (int k = 0; k <= n; ++k) {
                mpz_class scale;
                const mpz_class base = p;
                mpz_pow_ui(scale.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(n - k));
                out.add(scale * bk, "p^" + std::to_string(n - k) + "*B^" + std::to_string(k));
                if (k < n) bk *= b;
            }
            if (form == IpnForm::p_plus_1)
                out.add(square_residue_product(p), "prod_{i<p^2}(X-i)");
            break;
        }
        case IpnForm::product:
            return ipn_product_generators(pp, cap);
    }
    out.dedup();
    return out;
}

bool wilson_residue_check(std::int64_t p, std::int64_t k) {
    check_residue(k, p);
    const IntPoly h = square_residue_product(p);
    const IntPoly gp = newton_basis(static_cast<unsigned long>(p), p, k);
    return maximal_power_membership(h + gp, PrimePower(p, static_cast<int>(p) + 1), k);
}

}  // namespace ivpoly
