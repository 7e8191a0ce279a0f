#pragma once

#include "qcorr/channels.hpp"
#include "qcorr/linalg.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

// Projective measurement direction on the Bloch sphere, parametrized by
// |par> = cos(theta)|0> + e^{i phi} sin(theta)|1>. theta in [0, pi/2],
// phi in [0, pi) covers every distinct conditional spectrum.
struct MeasurementBasis {
    double theta = 0.0;
    double phi = 0.0;
};

Matrix projector_parallel(const MeasurementBasis& basis); // 2x2
Matrix projector_perp(const MeasurementBasis& basis);     // 2x2

// Conditional spectrum of the unmeasured qubit, plus outcome probabilities.
struct ConditionalSpectrum {
    double xi1 = 0.0; // larger eigenvalue
    double xi2 = 0.0;
    double q_par = 0.0;
    double q_perp = 0.0;
};

// One evaluated point of a correlation trajectory. branch records which
// evolved coefficient magnitude attained chi (1 = alpha, 2 = beta,
// 3 = gamma); (theta_opt, phi_opt) is a measurement reaching the extremum.
struct CorrelationRecord {
    double p = 0.0;
    double C = 0.0;   // classical correlation, bits
    double Q = 0.0;   // quantum discord, bits
    double I = 0.0;   // mutual information, bits
    double chi = 0.0; // max(|alpha|, |beta|, |gamma|)
    double theta_opt = 0.0;
    double phi_opt = 0.0;
    int branch = 3;
};

// I = S(rho_A) + S(rho_B) - S(rho_AB), bits.
double mutual_information(const Matrix& rho);

// sum_j q_j S(rho_A^j) for the projective measurement {par, perp} on B,
// with rho_A^j = Tr_B[(1 (x) P_j) rho (1 (x) P_j)] / q_j.
double conditional_entropy(const Matrix& rho, const MeasurementBasis& basis);

// Closed-form conditional spectrum for coefficients (alpha, beta, gamma):
//   xi_{1,2} = {2 +- sqrt(R)} / 4 with
//   R = 2g^2 + a^2 + b^2 + (2g^2 - a^2 - b^2) cos(4 theta)
//       + 2 (a^2 - b^2) cos(2 phi) sin^2(2 theta),
// and q_par = q_perp = 1/2.
ConditionalSpectrum conditional_spectrum_analytic(const EvolvedCoefficients& e,
                                                  const MeasurementBasis& basis);

struct NumericExtremum {
    double value = 0.0;
    MeasurementBasis basis;
};

// Exhaustive (theta, phi) grid of grid_n x grid_n over [0, pi/2] x [0, pi)
// followed by alternating golden-section refinement until the improvement per
// round drops below refine_tol. Requires maximally mixed marginals (so the
// objective is 1 - min conditional entropy); other states are redirected to
// classical_correlation_general.
NumericExtremum classical_correlation_numeric(const Matrix& rho, int grid_n = 256,
                                              double refine_tol = 1e-12);

// Same extremization with S(rho_A) evaluated explicitly; valid for any
// two-qubit density matrix.
NumericExtremum classical_correlation_general(const Matrix& rho, int grid_n = 256,
                                              double refine_tol = 1e-12);

struct AnalyticCorrelation {
    double value = 0.0;
    double chi = 0.0;
    int branch = 3;
};

// C = sum_{k=1,2} (1 + (-1)^k chi)/2 * log2(1 + (-1)^k chi) with
// chi = max(|alpha|, |beta|, |gamma|). Branch ties prefer 3 > 1 > 2.
AnalyticCorrelation classical_correlation_analytic(const EvolvedCoefficients& e);

// Q = 2 + sum_k lambda_k log2 lambda_k - C(chi), clamped at zero.
double quantum_discord_analytic(const EvolvedCoefficients& e);

// Full analytic record for an initial state, channel and parametrized time.
CorrelationRecord evaluate_analytic(const BellVector& c, ChannelKind kind, double p);

// Measurement angles attaining the extremum on each coefficient branch.
MeasurementBasis branch_angles(int branch);

} // namespace qcorr
