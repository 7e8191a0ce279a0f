#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qcorr/dynamics.hpp"

namespace qcorr {

// Uniform draw from the physical coefficient tetrahedron (rejection from the
// cube [-1,1]^3; acceptance rate 1/3). Uses the raw engine stream so the
// sequence is identical on every platform.
BellVector random_physical_bell(std::mt19937_64& rng);

struct VerifyOptions {
    int samples = 500;
    std::uint64_t seed = 42;
    int grid_n = 256;
    double refine_tol = 1e-12;
    double tolerance = 1e-6;
    int threads = 0;            // 0 = hardware concurrency
    double inject_error = 0.0;  // harness self-test: offset added to analytic C
};

struct VerifyFailure {
    BellVector state;
    ChannelKind kind = ChannelKind::PhaseFlip;
    double p = 0.0;
    double dC = 0.0;
    double dQ = 0.0;
};

struct VerifyReport {
    int samples = 0;
    int evaluations = 0;
    double max_dC = 0.0;
    double max_dQ = 0.0;
    std::vector<VerifyFailure> failures;

    bool passed(double tolerance) const {
        return max_dC <= tolerance && max_dQ <= tolerance;
    }
};

// Compares the closed-form C and Q against the matrix path (operator-sum
// evolution + grid extremization) on random states x 3 channels x
// p in {0, 0.1, ..., 1}. Deterministic for a given seed regardless of the
// thread count: states are drawn up front and results reduced in index order.
VerifyReport oracle_equivalence(const VerifyOptions& options);

} // namespace qcorr
