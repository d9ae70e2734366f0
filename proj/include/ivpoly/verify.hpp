#ifndef IVPOLY_VERIFY_HPP
#define IVPOLY_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ivpoly/intpoly.hpp"
#include "ivpoly/primary.hpp"

namespace ivpoly {

enum class VerifyStatus { certified_equal, counterexample, inconclusive };

const char* verify_status_name(VerifyStatus s);

struct VerifyResult {
    VerifyStatus status = VerifyStatus::inconclusive;
    int bound_used = 0;

    // counterexample: a candidate generator outside the ideal, with the
    // residue where the required divisibility fails (definitive)
    std::optional<IntPoly> bad_candidate;
    std::optional<mpz_class> failing_residue;

    // inconclusive: a canonical generator of the ideal the truncated
    // lattice could not certify inside the candidate; the generator is a
    // semantic member of the ideal, so it witnesses strictness whenever
    // the candidate really is smaller
    std::optional<IntPoly> uncertified_gen;

    std::string detail;
};

inline constexpr int kVerifyBoundCap = 128;

/// Decides whether the candidate generators span I_{p^n} (component < 0)
/// or the component Q_{n,j} (component = j >= 0).
///
/// Direction 1 (candidate inside ideal) is the semantic scan: a failure is
/// a definitive counterexample. Direction 2 (ideal inside candidate)
/// reduces canonical generators of the ideal, taken from the primary
/// decomposition, against the candidate's truncated lattice; a reduction
/// failure is reported as inconclusive at the bound, never as inequality.
/// The bound escalates D, 2D, 4D and is capped, and is always raised to
/// cover every generator degree first.
VerifyResult verify_equal(const GeneratorSet& candidate, const PrimePower& pp,
                          std::int64_t component, int degree_bound);

}  // namespace ivpoly

#endif
