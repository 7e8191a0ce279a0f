#include "qcorr/states.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "qcorr/errors.hpp"

namespace qcorr {

namespace {

constexpr double kPhysicalTol = 1e-12;
constexpr double kStrayTol = 1e-9;

std::array<double, 4> coefficient_spectrum(double a, double b, double g) {
    return {0.25 * (1.0 - a - b - g), 0.25 * (1.0 - a + b + g),
            0.25 * (1.0 + a - b + g), 0.25 * (1.0 + a + b - g)};
}

} // namespace

bool is_physical(const BellVector& c, double tol) {
    for (double lambda : coefficient_spectrum(c.c1, c.c2, c.c3)) {
        if (lambda < -tol) return false;
    }
    return true;
}

void validate_physical(const BellVector& c) {
    const auto lams = coefficient_spectrum(c.c1, c.c2, c.c3);
    for (std::size_t k = 0; k < lams.size(); ++k) {
        if (lams[k] < -kPhysicalTol) {
            std::ostringstream msg;
            msg << "not a state: coefficients (" << c.c1 << ", " << c.c2 << ", " << c.c3
                << ") give eigenvalue lambda_" << k + 1 << " = " << lams[k];
            throw NotAStateError(msg.str());
        }
    }
}

Matrix bell_state_matrix(const BellVector& c) {
    validate_physical(c);
    Matrix rho = Matrix::identity(4);
    rho += c.c1 * tensor(pauli(1), pauli(1));
    rho += c.c2 * tensor(pauli(2), pauli(2));
    rho += c.c3 * tensor(pauli(3), pauli(3));
    rho *= 0.25;
    return rho;
}

Spectrum spectrum_from_coefficients(const EvolvedCoefficients& e) {
    for (double v : {e.alpha, e.beta, e.gamma}) {
        if (std::abs(v) > 1.0 + kPhysicalTol) {
            throw std::invalid_argument("evolved coefficients must lie in [-1, 1]");
        }
    }
    const auto lams = coefficient_spectrum(e.alpha, e.beta, e.gamma);
    for (std::size_t k = 0; k < lams.size(); ++k) {
        if (lams[k] < -kPhysicalTol) {
            std::ostringstream msg;
            msg << "not a state: lambda_" << k + 1 << " = " << lams[k];
            throw NotAStateError(msg.str());
        }
    }
    return {lams[0], lams[1], lams[2], lams[3]};
}

BellVector coefficients_from_matrix(const Matrix& rho) {
    if (rho.dim() != 4) throw std::invalid_argument("coefficients_from_matrix requires 4x4");

    // Full two-qubit Pauli transfer components T_ij = Tr[rho sigma_i (x) sigma_j],
    // with sigma_0 = 1. Bell-diagonal means only T_00 = 1 and the T_ii survive.
    const Matrix id2 = Matrix::identity(2);
    auto factor = [&](int i) { return i == 0 ? id2 : pauli(i); };

    double c[4] = {0.0, 0.0, 0.0, 0.0};
    double worst = 0.0;
    int worst_i = 0, worst_j = 0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const Complex t = (rho * tensor(factor(i), factor(j))).trace();
            double stray = std::abs(t.imag());
            if (i == j) {
                if (i == 0) {
                    stray = std::max(stray, std::abs(t.real() - 1.0));
                } else {
                    c[i] = t.real();
                }
            } else {
                stray = std::max(stray, std::abs(t.real()));
            }
            if (stray > worst) {
                worst = stray;
                worst_i = i;
                worst_j = j;
            }
        }
    }
    if (worst > kStrayTol) {
        std::ostringstream msg;
        msg << "matrix is not Bell-diagonal: component T[" << worst_i << "][" << worst_j
            << "] deviates by " << worst;
        throw ShapeError(msg.str());
    }
    return {c[1], c[2], c[3]};
}

BellVector parse_bell_vector(std::string_view text) {
    BellVector c;
    char tail = '\0';
    const int n = std::sscanf(std::string(text).c_str(), "%lf,%lf,%lf%c", &c.c1, &c.c2, &c.c3, &tail);
    if (n != 3) {
        throw std::invalid_argument("expected state as c1,c2,c3 (got \"" + std::string(text) + "\")");
    }
    return c;
}

std::string format_bell_vector(const BellVector& c) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.9g,%.9g,%.9g", c.c1, c.c2, c.c3);
    return buf;
}

} // namespace qcorr
