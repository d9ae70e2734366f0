#ifndef IVPOLY_SEMANTIC_HPP
#define IVPOLY_SEMANTIC_HPP

#include <cstdint>
#include <optional>

#include "ivpoly/intpoly.hpp"

namespace ivpoly {

/// Brute-force membership in I_{p^n}: p^n | f(i) for every i in [0, p^n).
/// The finite scan suffices because f(i + p^n) = f(i) mod p^n.
///
/// The default entry points run a data-parallel kernel on coefficients
/// reduced mod p^n (OpenMP when enabled, modulus below 2^32); the _serial
/// variants evaluate f exactly with bignums, one residue at a time, and
/// are kept as the reference the kernel is tested and benchmarked against.

/// Least residue i (congruent to j mod p when j is given) with
/// p^n not dividing f(i); nullopt when f is a member.
std::optional<mpz_class> semantic_failure_witness(const IntPoly& f, const PrimePower& pp,
                                                  std::optional<std::int64_t> j = std::nullopt);
std::optional<mpz_class> semantic_failure_witness_serial(const IntPoly& f, const PrimePower& pp,
                                                         std::optional<std::int64_t> j = std::nullopt);

bool semantic_membership(const IntPoly& f, const PrimePower& pp);
bool semantic_membership_serial(const IntPoly& f, const PrimePower& pp);

/// Membership in the component Q_{n,j}: the scan restricted to the
/// p^(n-1) residues congruent to j mod p.
bool semantic_component_membership(const IntPoly& f, const PrimePower& pp, std::int64_t j);
bool semantic_component_membership_serial(const IntPoly& f, const PrimePower& pp, std::int64_t j);

}  // namespace ivpoly

#endif
