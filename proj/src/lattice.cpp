#include "ivpoly/lattice.hpp"

#include <stdexcept>
#include <utility>

namespace ivpoly {

const IntPoly* TruncatedLattice::row_with_degree(int d) const {
    if (d < 0 || d > degree_bound_) return nullptr;
    const auto& slot = rows_[static_cast<std::size_t>(d)];
    return slot ? &*slot : nullptr;
}

std::vector<IntPoly> TruncatedLattice::rows() const {
    std::vector<IntPoly> out;
    for (const auto& slot : rows_)
        if (slot) out.push_back(*slot);
    return out;
}

TruncatedLattice truncated_lattice(const GeneratorSet& gens, int degree_bound) {
    if (gens.gens.empty()) throw std::invalid_argument("truncated_lattice: no generators");
    for (const auto& g : gens.gens) {
        if (g.is_zero()) throw std::invalid_argument("truncated_lattice: zero generator");
        if (g.degree() > degree_bound)
            throw std::invalid_argument("truncated_lattice: degree bound below generator degree");
    }

    // all shifts X^t * g with degree <= bound, bucketed by degree
    std::vector<std::vector<IntPoly>> bucket(static_cast<std::size_t>(degree_bound) + 1);
    for (const auto& g : gens.gens)
        for (int t = 0; g.degree() + t <= degree_bound; ++t) {
            IntPoly shifted = g * IntPoly::monomial(1, static_cast<std::size_t>(t));
            bucket[static_cast<std::size_t>(shifted.degree())].push_back(std::move(shifted));
        }

    // triangularize top degree down: Euclid on leading coefficients leaves
    // one row per degree; byproducts drop into lower buckets
    std::vector<std::optional<IntPoly>> basis(static_cast<std::size_t>(degree_bound) + 1);
    for (int d = degree_bound; d >= 0; --d) {
        auto rows = std::move(bucket[static_cast<std::size_t>(d)]);
        std::optional<IntPoly> lead;
        for (auto& incoming : rows) {
            IntPoly r = std::move(incoming);
            while (true) {
                if (r.is_zero()) break;
                if (r.degree() < d) {
                    bucket[static_cast<std::size_t>(r.degree())].push_back(std::move(r));
                    break;
                }
                if (!lead) {
                    lead = std::move(r);
                    break;
                }
                mpz_class q;
                mpz_tdiv_q(q.get_mpz_t(), r.leading().get_mpz_t(), lead->leading().get_mpz_t());
                if (q != 0) r -= q * *lead;
                // keep the smaller leading coefficient as the survivor; the
                // pair shrinks every round, so this terminates
                if (!r.is_zero() && r.degree() == d) std::swap(*lead, r);
            }
        }
        if (lead) {
            if (lead->leading() < 0) *lead = -*lead;
            basis[static_cast<std::size_t>(d)] = std::move(*lead);
        }
    }

    // normalize entries over each pivot into [0, pivot), high column first so
    // earlier adjustments are not disturbed
    for (int e = 0; e <= degree_bound; ++e) {
        if (!basis[static_cast<std::size_t>(e)]) continue;
        for (int d = e - 1; d >= 0; --d) {
            if (!basis[static_cast<std::size_t>(d)]) continue;
            const mpz_class& pivot = basis[static_cast<std::size_t>(d)]->leading();
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(),
                       basis[static_cast<std::size_t>(e)]->coeff(static_cast<std::size_t>(d)).get_mpz_t(),
                       pivot.get_mpz_t());
            if (q != 0)
                *basis[static_cast<std::size_t>(e)] -= q * *basis[static_cast<std::size_t>(d)];
        }
    }

    return TruncatedLattice(degree_bound, std::move(basis));
}

bool lattice_contains(const TruncatedLattice& lattice, const IntPoly& f) {
    if (f.degree() > lattice.degree_bound())
        throw std::invalid_argument("lattice_contains: degree exceeds the lattice bound");
    IntPoly r = f;
    while (!r.is_zero()) {
        const IntPoly* row = lattice.row_with_degree(r.degree());
        if (!row) return false;
        const mpz_class& pivot = row->leading();
        if (!mpz_divisible_p(r.leading().get_mpz_t(), pivot.get_mpz_t())) return false;
        r -= mpz_class(r.leading() / pivot) * *row;
    }
    return true;
}

}  // namespace ivpoly
