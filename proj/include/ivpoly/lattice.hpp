#ifndef IVPOLY_LATTICE_HPP
#define IVPOLY_LATTICE_HPP

#include <optional>
#include <vector>

#include "ivpoly/intpoly.hpp"
#include "ivpoly/primary.hpp"

namespace ivpoly {

/// Canonical triangular basis (Hermite normal form) of the integer lattice
/// spanned by all shifts X^t * g, g in gens, of degree at most the bound.
/// At most one row per degree; each pivot (leading coefficient) is
/// positive, and every other row's entry at a pivot's degree is reduced
/// into [0, pivot). The form is unique for the lattice, so construction is
/// deterministic and independent of generator order.
class TruncatedLattice {
public:
    TruncatedLattice(int degree_bound, std::vector<std::optional<IntPoly>> rows_by_degree)
        : degree_bound_(degree_bound), rows_(std::move(rows_by_degree)) {}

    int degree_bound() const { return degree_bound_; }
    /// Row of degree d, or nullptr.
    const IntPoly* row_with_degree(int d) const;
    /// Present rows, pivot degree ascending.
    std::vector<IntPoly> rows() const;

private:
    int degree_bound_;
    std::vector<std::optional<IntPoly>> rows_;  // index = pivot degree
};

/// Throws std::invalid_argument on an empty generator list, a zero
/// generator, or a bound below the largest generator degree.
TruncatedLattice truncated_lattice(const GeneratorSet& gens, int degree_bound);

/// True iff f reduces to zero against the basis, subtracting the full row
/// at each pivot with exact divisibility. Sound for membership in the
/// ideal the generators span; a false answer only means "not certified at
/// this bound". Throws when deg(f) exceeds the bound.
bool lattice_contains(const TruncatedLattice& lattice, const IntPoly& f);

}  // namespace ivpoly

#endif
