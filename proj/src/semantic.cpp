#include "ivpoly/semantic.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace ivpoly {

namespace {

constexpr std::uint64_t kNoFailure = ~std::uint64_t{0};
constexpr std::uint64_t kBlock = 1 << 14;

void check_residue(std::optional<std::int64_t> j, std::int64_t p) {
    if (j && (*j < 0 || *j >= p)) throw std::invalid_argument("residue j must lie in [0, p)");
}

// Horner mod m; all operands below 2^32, so acc * x + c stays in 64 bits.
std::uint64_t eval_mod(const std::vector<std::uint64_t>& coeffs, std::uint64_t x, std::uint64_t m) {
    std::uint64_t acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = (acc * x + coeffs[i]) % m;
    return acc;
}

// Scans residues start, start+step, ... (count of them), returning the index
// t of the least failure, block by block so a hit stops the remaining work.
std::uint64_t scan_reduced(const std::vector<std::uint64_t>& coeffs, std::uint64_t m,
                           std::uint64_t start, std::uint64_t step, std::uint64_t count) {
    for (std::uint64_t base = 0; base < count; base += kBlock) {
        const std::uint64_t hi = base + kBlock < count ? base + kBlock : count;
        std::uint64_t found = kNoFailure;
#pragma omp parallel for reduction(min : found) schedule(static)
        for (std::int64_t t = static_cast<std::int64_t>(base); t < static_cast<std::int64_t>(hi); ++t) {
            const std::uint64_t i = start + static_cast<std::uint64_t>(t) * step;
            if (eval_mod(coeffs, i % m, m) != 0) {
                const auto u = static_cast<std::uint64_t>(t);
                if (u < found) found = u;
            }
        }
        if (found != kNoFailure) return found;
    }
    return kNoFailure;
}

}  // namespace

std::optional<mpz_class> semantic_failure_witness(const IntPoly& f, const PrimePower& pp,
                                                  std::optional<std::int64_t> j) {
    check_residue(j, pp.prime());
    const mpz_class& m = pp.modulus();
    if (mpz_sizeinbase(m.get_mpz_t(), 2) > 32)
        return semantic_failure_witness_serial(f, pp, j);  // kernel needs a 32-bit modulus

    const std::uint64_t mod = mpz_get_ui(m.get_mpz_t());
    std::vector<std::uint64_t> reduced(f.coeffs().size());
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), f.coeffs()[i].get_mpz_t(), m.get_mpz_t());
        reduced[i] = mpz_get_ui(r.get_mpz_t());
    }

    const auto p = static_cast<std::uint64_t>(pp.prime());
    const std::uint64_t start = j ? static_cast<std::uint64_t>(*j) : 0;
    const std::uint64_t step = j ? p : 1;
    const std::uint64_t count = j ? mod / p : mod;
    const std::uint64_t t = scan_reduced(reduced, mod, start, step, count);
    if (t == kNoFailure) return std::nullopt;
    return mpz_class(start + t * step);
}

std::optional<mpz_class> semantic_failure_witness_serial(const IntPoly& f, const PrimePower& pp,
                                                         std::optional<std::int64_t> j) {
    check_residue(j, pp.prime());
    const mpz_class& m = pp.modulus();
    const mpz_class step = j ? mpz_class(pp.prime()) : mpz_class(1);
    for (mpz_class i = j ? mpz_class(*j) : mpz_class(0); i < m; i += step) {
        mpz_class v = f(i);
        if (!mpz_divisible_p(v.get_mpz_t(), m.get_mpz_t())) return i;
    }
    return std::nullopt;
}

bool semantic_membership(const IntPoly& f, const PrimePower& pp) {
    return !semantic_failure_witness(f, pp).has_value();
}

bool semantic_membership_serial(const IntPoly& f, const PrimePower& pp) {
    return !semantic_failure_witness_serial(f, pp).has_value();
}

bool semantic_component_membership(const IntPoly& f, const PrimePower& pp, std::int64_t j) {
    return !semantic_failure_witness(f, pp, j).has_value();
}

bool semantic_component_membership_serial(const IntPoly& f, const PrimePower& pp, std::int64_t j) {
    return !semantic_failure_witness_serial(f, pp, j).has_value();
}

}  // namespace ivpoly
