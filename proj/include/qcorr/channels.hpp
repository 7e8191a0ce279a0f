#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "qcorr/linalg.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

enum class ChannelKind { PhaseFlip, BitFlip, BitPhaseFlip };
enum class Side { A, B };

// Pauli direction of the non-trivial Kraus operator: 1 for bit flip, 2 for
// bit-phase flip, 3 for phase flip. This is also the coefficient axis the
// channel leaves untouched.
int flip_axis(ChannelKind kind);

const char* to_string(ChannelKind kind);
std::optional<ChannelKind> channel_from_string(std::string_view name);

// One side's Kraus pair embedded in the two-qubit space:
//   G0 = sqrt(1 - p/2) * 1,   G1 = sqrt(p/2) * sigma_axis on the active side.
struct KrausSet {
    ChannelKind kind;
    Side side;
    double p = 0.0;
    std::vector<Matrix> operators; // 4x4, identity on the passive side
};

KrausSet kraus_set(ChannelKind kind, Side side, double p);

// Operator-sum application of one side's Kraus set: sum_i G_i rho G_i^dag.
Matrix apply_kraus(const Matrix& rho, const KrausSet& set);

// Symmetric two-sided channel, p_A = p_B = p:
//   eps(rho) = sum_{i,j} G_i^A G_j^B rho G_j^B^dag G_i^A^dag.
Matrix apply_channel(const Matrix& rho, ChannelKind kind, double p);

// Closed-form coefficient map. The scanned pair shrinks by (1-p)^2, the flip
// axis is preserved:
//   phase flip:     ((1-p)^2 c1, (1-p)^2 c2, c3)
//   bit flip:       (c1, (1-p)^2 c2, (1-p)^2 c3)
//   bit-phase flip: ((1-p)^2 c1, c2, (1-p)^2 c3)
EvolvedCoefficients evolve_coefficients(const BellVector& c, ChannelKind kind, double p);

// Parametrized time of an exponential decay: p = 1 - exp(-rate * t).
double p_from_time(double t, double rate);

} // namespace qcorr
