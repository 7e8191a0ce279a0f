#pragma once

#include <random>

#include "qcorr/states.hpp"
#include "qcorr/verify.hpp"

namespace qcorr::testing {

inline std::mt19937_64 seeded_rng(std::uint64_t seed = 20260809) {
    return std::mt19937_64(seed);
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
}

// Random Hermitian 2x2 with entries of order one.
inline Matrix random_hermitian2(std::mt19937_64& rng) {
    Matrix m(2);
    m(0, 0) = uniform(rng, -1.0, 1.0);
    m(1, 1) = uniform(rng, -1.0, 1.0);
    const Complex off(uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0));
    m(0, 1) = off;
    m(1, 0) = std::conj(off);
    return m;
}

} // namespace qcorr::testing
