#pragma once

#include <string>
#include <string_view>

#include "qcorr/linalg.hpp"

namespace qcorr {

// Coefficients (c1, c2, c3) of the two-qubit family with maximally mixed
// marginals: rho = (1 + sum_i c_i sigma_i (x) sigma_i) / 4.
struct BellVector {
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
};

// Channel-evolved coefficient triple. Same geometry as BellVector; kept as a
// distinct type so evolved and initial coefficients don't mix silently.
struct EvolvedCoefficients {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

// Physicality = all four eigenvalues of the coefficient spectrum are >= -tol.
bool is_physical(const BellVector& c, double tol = 1e-12);
// Throws NotAStateError naming the offending eigenvalue.
void validate_physical(const BellVector& c);

// rho = (1 + sum_i c_i sigma_i (x) sigma_i) / 4. Hermitian, unit trace, both
// marginals maximally mixed.
Matrix bell_state_matrix(const BellVector& c);

// The four eigenvalues (1 -+ alpha -+ beta -+ gamma)/4 in their canonical
// order (not sorted): {1-a-b-g, 1-a+b+g, 1+a-b+g, 1+a+b-g} / 4.
Spectrum spectrum_from_coefficients(const EvolvedCoefficients& e);

// Inverse map c_i = Tr[rho (sigma_i (x) sigma_i)]. Rejects matrices carrying
// any other Pauli component above 1e-9, reporting the largest stray one.
BellVector coefficients_from_matrix(const Matrix& rho);

// Text form "c1,c2,c3" used on the command line.
BellVector parse_bell_vector(std::string_view text);
std::string format_bell_vector(const BellVector& c);

} // namespace qcorr
