#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "qcorr/channels.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/linalg.hpp"
#include "qcorr/states.hpp"
#include "support/random_bell.hpp"

using namespace qcorr;

namespace {

Matrix basis_projector2(int i) {
    Matrix m(2);
    m(i, i) = 1.0;
    return m;
}

} // namespace

TEST_CASE("tensor: identity and Pauli products") {
    const Matrix id2 = Matrix::identity(2);
    CHECK(max_abs_diff(tensor(id2, id2), Matrix::identity(4)) == 0.0);

    const Matrix zz = tensor(pauli(3), pauli(3));
    Matrix expected(4);
    expected(0, 0) = 1.0;
    expected(1, 1) = -1.0;
    expected(2, 2) = -1.0;
    expected(3, 3) = 1.0;
    CHECK(max_abs_diff(zz, expected) == 0.0);
}

TEST_CASE("tensor: sigma_x term of the state family") {
    // rho = (1 + sigma_x (x) sigma_x) / 4 has the anti-diagonal corners 1/4
    const Matrix rho = bell_state_matrix({1.0, 0.0, 0.0});
    CHECK(rho(0, 3).real() == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(rho(1, 2).real() == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("tensor: rejects non-2x2 factors") {
    CHECK_THROWS_AS(tensor(Matrix::identity(4), Matrix::identity(2)), std::invalid_argument);
}

TEST_CASE("tensor: trace is multiplicative") {
    auto rng = testing::seeded_rng();
    for (int trial = 0; trial < 50; ++trial) {
        const Matrix a = testing::random_hermitian2(rng);
        const Matrix b = testing::random_hermitian2(rng);
        const Complex lhs = tensor(a, b).trace();
        const Complex rhs = a.trace() * b.trace();
        CHECK(std::abs(lhs - rhs) <= 1e-12);
    }
}

TEST_CASE("partial_trace: Bell-diagonal states have maximally mixed marginals") {
    const Matrix rho = bell_state_matrix({0.06, 0.42, 0.30});
    const Matrix half = 0.5 * Matrix::identity(2);
    CHECK(max_abs_diff(partial_trace(rho, Subsystem::A), half) <= 1e-15);
    CHECK(max_abs_diff(partial_trace(rho, Subsystem::B), half) <= 1e-15);
}

TEST_CASE("partial_trace: factorizes product states") {
    const Matrix rho = tensor(basis_projector2(0), basis_projector2(1));
    CHECK(max_abs_diff(partial_trace(rho, Subsystem::A), basis_projector2(0)) == 0.0);
    CHECK(max_abs_diff(partial_trace(rho, Subsystem::B), basis_projector2(1)) == 0.0);
}

TEST_CASE("partial_trace: marginals invariant under phase flip") {
    const Matrix rho = apply_channel(bell_state_matrix({0.06, 0.42, 0.30}),
                                     ChannelKind::PhaseFlip, 0.3);
    const Matrix half = 0.5 * Matrix::identity(2);
    CHECK(max_abs_diff(partial_trace(rho, Subsystem::B), half) <= 1e-14);
}

TEST_CASE("partial_trace composed with tensor recovers the kept factor") {
    auto rng = testing::seeded_rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Matrix a = testing::random_hermitian2(rng);
        Matrix b = testing::random_hermitian2(rng);
        // normalize to unit global trace so the precondition holds
        const double ta = a.trace().real();
        const double tb = b.trace().real();
        if (std::abs(ta) < 0.2 || std::abs(tb) < 0.2) continue;
        a *= 1.0 / ta;
        b *= 1.0 / tb;
        const Matrix joint = tensor(a, b);
        CHECK(max_abs_diff(partial_trace(joint, Subsystem::A), a) <= 1e-12);
        CHECK(max_abs_diff(partial_trace(joint, Subsystem::B), b) <= 1e-12);
    }
}

TEST_CASE("partial_trace: rejects non-unit trace") {
    const Matrix rho = 2.0 * bell_state_matrix({0.0, 0.0, 0.0});
    CHECK_THROWS_AS(partial_trace(rho, Subsystem::A), NotAStateError);
    CHECK_THROWS_AS(partial_trace(Matrix::identity(2), Subsystem::A), std::invalid_argument);
}

TEST_CASE("hermitian_eigenvalues: diagonal case") {
    Matrix m(4);
    m(0, 0) = 0.4;
    m(1, 1) = 0.3;
    m(2, 2) = 0.2;
    m(3, 3) = 0.1;
    const Spectrum eigs = hermitian_eigenvalues(m);
    REQUIRE(eigs.size() == 4);
    CHECK(eigs[0] == doctest::Approx(0.4).epsilon(1e-14));
    CHECK(eigs[1] == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(eigs[2] == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(eigs[3] == doctest::Approx(0.1).epsilon(1e-14));
}

TEST_CASE("hermitian_eigenvalues: state-family spectrum") {
    const Spectrum eigs = hermitian_eigenvalues(bell_state_matrix({0.06, 0.42, 0.30}));
    const double expected[4] = {0.415, 0.295, 0.235, 0.055};
    for (int k = 0; k < 4; ++k) CHECK(eigs[k] == doctest::Approx(expected[k]).epsilon(1e-12));
}

TEST_CASE("hermitian_eigenvalues: pure Bell projector") {
    const Spectrum eigs = hermitian_eigenvalues(bell_state_matrix({1.0, -1.0, 1.0}));
    CHECK(eigs[0] == doctest::Approx(1.0).epsilon(1e-12));
    for (int k = 1; k < 4; ++k) CHECK(std::abs(eigs[k]) <= 1e-12);
}

TEST_CASE("hermitian_eigenvalues: rejects non-Hermitian input") {
    Matrix m(2);
    m(0, 1) = 1.0; // m(1,0) stays 0
    CHECK_THROWS_AS(hermitian_eigenvalues(m), std::invalid_argument);
}

TEST_CASE("hermitian_eigenvalues: spectrum stable under Pauli-string rotations") {
    // Unitaries assembled from the channels' normalized Kraus directions.
    auto rng = testing::seeded_rng(11);
    const Matrix id2 = Matrix::identity(2);
    for (int trial = 0; trial < 30; ++trial) {
        const Matrix m = bell_state_matrix(random_physical_bell(rng));
        Matrix u = Matrix::identity(4);
        for (int step = 0; step < 6; ++step) {
            const int axis = 1 + static_cast<int>(rng() % 3);
            const bool on_a = (rng() % 2) == 0;
            u = u * (on_a ? tensor(pauli(axis), id2) : tensor(id2, pauli(axis)));
        }
        const Matrix rotated = u * m * u.adjoint();
        const Spectrum s1 = hermitian_eigenvalues(m);
        const Spectrum s2 = hermitian_eigenvalues(rotated);
        for (int k = 0; k < 4; ++k) CHECK(std::abs(s1[k] - s2[k]) <= 1e-9);
    }
}

TEST_CASE("hermitian_eigenvalues: sum equals trace") {
    auto rng = testing::seeded_rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        const Matrix m = bell_state_matrix(random_physical_bell(rng));
        const Spectrum eigs = hermitian_eigenvalues(m);
        double sum = 0.0;
        for (double e : eigs) sum += e;
        CHECK(std::abs(sum - m.trace().real()) <= 1e-10);
    }
}

TEST_CASE("von_neumann_entropy: reference values") {
    CHECK(von_neumann_entropy(0.5 * Matrix::identity(2)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(von_neumann_entropy(bell_state_matrix({1.0, -1.0, 1.0})) ==
          doctest::Approx(0.0).epsilon(1e-12));
    // spectrum {0.325, 0.325, 0.175, 0.175}
    CHECK(von_neumann_entropy(bell_state_matrix({0.0, 0.0, 0.3})) ==
          doctest::Approx(1.9340680553754910).epsilon(1e-12));
}

TEST_CASE("von_neumann_entropy: rejects negative eigenvalues") {
    Matrix m(4);
    m(0, 0) = 1.05;
    m(1, 1) = -0.05;
    CHECK_THROWS_AS(von_neumann_entropy(m), NotAStateError);
    try {
        von_neumann_entropy(m);
    } catch (const NotAStateError& e) {
        CHECK(std::string(e.what()).find("-0.05") != std::string::npos);
    }
}

TEST_CASE("entropy is concave on state mixtures") {
    auto rng = testing::seeded_rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        const Matrix r1 = bell_state_matrix(random_physical_bell(rng));
        const Matrix r2 = bell_state_matrix(random_physical_bell(rng));
        const Matrix mix = 0.5 * r1 + 0.5 * r2;
        const double lhs = von_neumann_entropy(mix);
        const double rhs = 0.5 * von_neumann_entropy(r1) + 0.5 * von_neumann_entropy(r2);
        CHECK(lhs >= rhs - 1e-10);
    }
}
