// Times the reduced-coefficient scan kernel (OpenMP when enabled) against
// the serial bignum reference on full-length member scans, where neither
// side can exit early.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ivpoly/intpoly.hpp"
#include "ivpoly/semantic.hpp"

using namespace ivpoly;

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

IntPoly random_member(const PrimePower& pp, int deg, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> dist(-1000000, 1000000);
    std::vector<mpz_class> coeffs;
    for (int i = 0; i <= deg; ++i) coeffs.emplace_back(dist(rng));
    return pp.modulus() * IntPoly(std::move(coeffs));
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (OpenMP disabled)\n";
#endif
    std::cout << "p^n, degree, serial reference (ms), kernel (ms), speedup\n";

    std::mt19937_64 rng(42);
    for (const auto& [p, n] : std::vector<std::pair<std::int64_t, int>>{
             {2, 16}, {2, 20}, {3, 12}, {5, 8}, {7, 7}}) {
        const PrimePower pp(p, n);
        const IntPoly f = random_member(pp, 12, rng);

        auto t0 = std::chrono::steady_clock::now();
        const bool serial = semantic_membership_serial(f, pp);
        const double serial_ms = ms_since(t0);

        t0 = std::chrono::steady_clock::now();
        const bool kernel = semantic_membership(f, pp);
        const double kernel_ms = ms_since(t0);

        if (serial != kernel) {
            std::cerr << "DISAGREEMENT at p=" << p << " n=" << n << "\n";
            return 1;
        }
        std::cout << p << "^" << n << ", " << f.degree() << ", " << serial_ms << ", " << kernel_ms
                  << ", " << (kernel_ms > 0 ? serial_ms / kernel_ms : 0.0) << "\n";
    }
    return 0;
}
