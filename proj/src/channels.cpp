#include "qcorr/channels.hpp"

#include <cmath>
#include <stdexcept>

#include "qcorr/errors.hpp"

namespace qcorr {

namespace {

void check_p(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("parametrized time p must lie in [0, 1]");
    }
}

} // namespace

int flip_axis(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::BitFlip: return 1;
        case ChannelKind::BitPhaseFlip: return 2;
        case ChannelKind::PhaseFlip: return 3;
    }
    throw std::invalid_argument("unknown channel kind");
}

const char* to_string(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::PhaseFlip: return "phase-flip";
        case ChannelKind::BitFlip: return "bit-flip";
        case ChannelKind::BitPhaseFlip: return "bit-phase-flip";
    }
    return "?";
}

std::optional<ChannelKind> channel_from_string(std::string_view name) {
    if (name == "phase-flip") return ChannelKind::PhaseFlip;
    if (name == "bit-flip") return ChannelKind::BitFlip;
    if (name == "bit-phase-flip") return ChannelKind::BitPhaseFlip;
    return std::nullopt;
}

KrausSet kraus_set(ChannelKind kind, Side side, double p) {
    check_p(p);
    const Matrix id2 = Matrix::identity(2);
    Matrix g0 = std::sqrt(1.0 - p / 2.0) * id2;
    Matrix g1 = std::sqrt(p / 2.0) * pauli(flip_axis(kind));
    KrausSet set{kind, side, p, {}};
    if (side == Side::A) {
        set.operators = {tensor(g0, id2), tensor(g1, id2)};
    } else {
        set.operators = {tensor(id2, g0), tensor(id2, g1)};
    }
    return set;
}

Matrix apply_kraus(const Matrix& rho, const KrausSet& set) {
    Matrix out(4);
    for (const Matrix& g : set.operators) out += g * rho * g.adjoint();
    return out;
}

Matrix apply_channel(const Matrix& rho, ChannelKind kind, double p) {
    check_p(p);
    if (rho.dim() != 4) throw std::invalid_argument("apply_channel requires a 4x4 state");
    validate_density(rho);
    const KrausSet a = kraus_set(kind, Side::A, p);
    const KrausSet b = kraus_set(kind, Side::B, p);
    Matrix out(4);
    for (const Matrix& ga : a.operators) {
        for (const Matrix& gb : b.operators) {
            const Matrix k = ga * gb;
            out += k * rho * k.adjoint();
        }
    }
    return out;
}

EvolvedCoefficients evolve_coefficients(const BellVector& c, ChannelKind kind, double p) {
    check_p(p);
    validate_physical(c);
    const double shrink = (1.0 - p) * (1.0 - p);
    switch (kind) {
        case ChannelKind::PhaseFlip: return {shrink * c.c1, shrink * c.c2, c.c3};
        case ChannelKind::BitFlip: return {c.c1, shrink * c.c2, shrink * c.c3};
        case ChannelKind::BitPhaseFlip: return {shrink * c.c1, c.c2, shrink * c.c3};
    }
    throw std::invalid_argument("unknown channel kind");
}

double p_from_time(double t, double rate) {
    if (!(t >= 0.0)) throw std::invalid_argument("time must be non-negative");
    if (!(rate > 0.0)) throw std::invalid_argument("decay rate must be positive");
    return -std::expm1(-rate * t);
}

} // namespace qcorr
