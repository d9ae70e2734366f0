#include "ivpoly/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "ivpoly/lattice.hpp"
#include "ivpoly/poly_text.hpp"
#include "ivpoly/semantic.hpp"

namespace ivpoly {

const char* verify_status_name(VerifyStatus s) {
    switch (s) {
        case VerifyStatus::certified_equal: return "certified-equal";
        case VerifyStatus::counterexample: return "counterexample";
        case VerifyStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

VerifyResult verify_equal(const GeneratorSet& candidate, const PrimePower& pp,
                          std::int64_t component, int degree_bound) {
    if (candidate.gens.empty())
        throw std::invalid_argument("verify_equal: empty candidate generator set");
    if (component >= pp.prime())
        throw std::invalid_argument("verify_equal: component out of range");
    const bool full = component < 0;

    VerifyResult res;

    // direction 1: every candidate generator must vanish mod p^n on the
    // scanned residues; a failure here refutes the claim outright
    for (const auto& g : candidate.gens) {
        const auto witness = full ? semantic_failure_witness(g, pp)
                                  : semantic_failure_witness(g, pp, component);
        if (witness) {
            res.status = VerifyStatus::counterexample;
            res.bound_used = degree_bound;
            res.bad_candidate = g;
            res.failing_residue = *witness;
            res.detail = "candidate generator " + emit_poly(g) + " fails at residue " +
                         witness->get_str();
            return res;
        }
    }

    // canonical generators from the primary decomposition (the product
    // expansion for the full ideal, so the closed forms under test never
    // certify themselves)
    const GeneratorSet canonical =
        full ? ipn_product_generators(pp) : component_generators(pp, component);

    int max_deg = 0;
    for (const auto& g : candidate.gens) max_deg = std::max(max_deg, g.degree());
    for (const auto& g : canonical.gens) max_deg = std::max(max_deg, g.degree());

    // direction 2 with escalating bounds, capped, never below the largest
    // generator degree
    std::vector<int> schedule;
    for (int mult : {1, 2, 4}) {
        int d = std::min(degree_bound * mult, kVerifyBoundCap);
        d = std::max(d, max_deg);
        if (schedule.empty() || d > schedule.back()) schedule.push_back(d);
    }

    for (int d : schedule) {
        res.bound_used = d;
        const TruncatedLattice lattice = truncated_lattice(candidate, d);
        const IntPoly* failed = nullptr;
        for (const auto& g : canonical.gens) {
            if (!lattice_contains(lattice, g)) {
                failed = &g;
                break;
            }
        }
        if (!failed) {
            res.status = VerifyStatus::certified_equal;
            res.detail = "both containments certified at degree bound " + std::to_string(d);
            return res;
        }
        res.uncertified_gen = *failed;
    }

    res.status = VerifyStatus::inconclusive;
    res.detail = "ideal generator " + emit_poly(*res.uncertified_gen) +
                 " (a semantic member) is not certified inside the candidate at degree bound " +
                 std::to_string(res.bound_used) +
                 "; raise the bound, or the candidate is strictly smaller";
    return res;
}

}  // namespace ivpoly
