#include "qcorr/dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "qcorr/errors.hpp"

namespace qcorr {

namespace {

// Coefficient value along a given axis.
double axis_value(const BellVector& c, int axis) {
    switch (axis) {
        case 1: return c.c1;
        case 2: return c.c2;
        case 3: return c.c3;
    }
    throw std::invalid_argument("axis must be 1, 2 or 3");
}

// The two coefficient axes a channel shrinks.
std::pair<int, int> scanned_axes(ChannelKind kind) {
    switch (flip_axis(kind)) {
        case 1: return {2, 3};
        case 2: return {1, 3};
        default: return {1, 2};
    }
}

} // namespace

const char* to_string(Regime regime) {
    switch (regime) {
        case Regime::ConstantClassical: return "i";
        case Regime::SuddenChange: return "ii";
        case Regime::MonotonicDecay: return "iii";
    }
    return "?";
}

const char* to_string(CellFlag flag) {
    switch (flag) {
        case CellFlag::Ok: return "ok";
        case CellFlag::NoSuddenChange: return "no-sudden-change";
        case CellFlag::Unphysical: return "unphysical";
    }
    return "?";
}

std::optional<double> sudden_change_time(const BellVector& c, ChannelKind kind) {
    validate_physical(c);
    const int axis = flip_axis(kind);
    const auto [u, v] = scanned_axes(kind);
    const double preserved = std::abs(axis_value(c, axis));
    const double largest = std::max(std::abs(axis_value(c, u)), std::abs(axis_value(c, v)));
    if (preserved == 0.0 || largest == 0.0 || preserved >= largest) return std::nullopt;
    const double p = 1.0 - std::sqrt(preserved / largest);
    if (p <= 0.0 || p >= 1.0) return std::nullopt;
    return p;
}

RegimeReport classify_regime(const BellVector& c, ChannelKind kind) {
    validate_physical(c);
    const int axis = flip_axis(kind);
    const auto [u, v] = scanned_axes(kind);
    const double preserved = std::abs(axis_value(c, axis));
    const double largest = std::max(std::abs(axis_value(c, u)), std::abs(axis_value(c, v)));

    RegimeReport report;
    if (preserved == 0.0) {
        report.regime = Regime::MonotonicDecay;
        report.description = "both correlations decay monotonically";
    } else if (preserved >= largest) {
        report.regime = Regime::ConstantClassical;
        report.constant_axis = axis;
        report.description = "classical correlation constant, discord decays";
    } else {
        report.regime = Regime::SuddenChange;
        report.p_sc = sudden_change_time(c, kind);
        report.description = "sudden change in decay behavior";
    }
    return report;
}

bool commutation_condition(const MeasurementBasis& basis, ChannelKind kind) {
    const Matrix id2 = Matrix::identity(2);
    const KrausSet set = kraus_set(kind, Side::B, 0.5);
    for (const Matrix& proj : {projector_parallel(basis), projector_perp(basis)}) {
        const Matrix embedded = tensor(id2, proj);
        for (const Matrix& kraus : set.operators) {
            if (max_abs(commutator(embedded, kraus)) > 1e-12) return false;
        }
    }
    return true;
}

OperationalMeasure operational_discord(const BellVector& c, bool verify, int grid_n) {
    validate_physical(c);
    // Dominant coefficient axis, ties broken 3 > 1 > 2.
    const double a1 = std::abs(c.c1), a2 = std::abs(c.c2), a3 = std::abs(c.c3);
    int axis;
    if (a3 >= a1 && a3 >= a2) {
        axis = 3;
    } else if (a1 >= a2) {
        axis = 1;
    } else {
        axis = 2;
    }
    ChannelKind kind;
    switch (axis) {
        case 1: kind = ChannelKind::BitFlip; break;
        case 2: kind = ChannelKind::BitPhaseFlip; break;
        default: kind = ChannelKind::PhaseFlip; break;
    }

    // C = I of the fully decohered state; the preserved axis is all that
    // survives at p = 1.
    const CorrelationRecord decohered = evaluate_analytic(c, kind, 1.0);
    const CorrelationRecord initial = evaluate_analytic(c, kind, 0.0);

    OperationalMeasure result;
    result.channel_used = kind;
    result.C = decohered.I;
    result.Q = std::max(initial.I - result.C, 0.0);
    if (verify) {
        const NumericExtremum numeric =
            classical_correlation_numeric(bell_state_matrix(c), grid_n);
        result.verification_delta = std::abs(result.C - numeric.value);
    }
    return result;
}

SweepResult sweep(const BellVector& c, ChannelKind kind, const std::vector<double>& p_grid) {
    for (std::size_t i = 0; i < p_grid.size(); ++i) {
        if (p_grid[i] < 0.0 || p_grid[i] > 1.0) {
            throw std::invalid_argument("sweep grid values must lie in [0, 1]");
        }
        if (i > 0 && p_grid[i] <= p_grid[i - 1]) {
            throw std::invalid_argument("sweep grid must be strictly increasing");
        }
    }

    SweepResult result;
    result.channel = kind;
    result.state = c;
    result.samples.reserve(p_grid.size());
    for (double p : p_grid) result.samples.push_back(evaluate_analytic(c, kind, p));

    // Q = C crossings: sign changes of Q - C with linear interpolation, plus
    // exact grid hits. A trajectory with Q identically equal to C (all-zero
    // state) reports none.
    const auto& s = result.samples;
    const std::size_t n = s.size();
    auto diff = [&](std::size_t i) { return s[i].Q - s[i].C; };
    for (std::size_t i = 0; i < n; ++i) {
        const double d = diff(i);
        if (d == 0.0) {
            const bool left_live = i > 0 && diff(i - 1) != 0.0;
            const bool right_live = i + 1 < n && diff(i + 1) != 0.0;
            if (left_live || right_live) result.crossings.push_back(s[i].p);
        } else if (i + 1 < n && d * diff(i + 1) < 0.0) {
            const double frac = d / (d - diff(i + 1));
            result.crossings.push_back(s[i].p + frac * (s[i + 1].p - s[i].p));
        }
    }

    // chi branch change marks the detected sudden-change point.
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i].branch != s[i - 1].branch) {
            result.p_sc_detected = 0.5 * (s[i - 1].p + s[i].p);
            break;
        }
    }
    return result;
}

SurfaceResult surface(ChannelKind kind, double fixed_value, const SurfaceGrid& grid) {
    if (std::abs(fixed_value) > 1.0) {
        throw std::invalid_argument("fixed coefficient must lie in [-1, 1]");
    }
    if (grid.u_step <= 0.0 || grid.v_step <= 0.0 || grid.u_start > grid.u_stop ||
        grid.v_start > grid.v_stop) {
        throw std::invalid_argument("surface grid ranges must be non-empty with positive step");
    }

    SurfaceResult result;
    result.channel = kind;
    result.fixed_value = fixed_value;
    result.fixed_axis = flip_axis(kind);
    const auto [u_axis, v_axis] = scanned_axes(kind);
    result.axis_u = u_axis;
    result.axis_v = v_axis;

    auto make_state = [&](double u, double v) {
        BellVector c;
        double* slots[4] = {nullptr, &c.c1, &c.c2, &c.c3};
        *slots[result.fixed_axis] = fixed_value;
        *slots[u_axis] = u;
        *slots[v_axis] = v;
        return c;
    };

    for (long i = 0;; ++i) {
        const double u = grid.u_start + static_cast<double>(i) * grid.u_step;
        if (u > grid.u_stop + 1e-12) break;
        for (long j = 0;; ++j) {
            const double v = grid.v_start + static_cast<double>(j) * grid.v_step;
            if (v > grid.v_stop + 1e-12) break;
            SurfaceCell cell;
            cell.u = u;
            cell.v = v;
            const BellVector c = make_state(u, v);
            if (!is_physical(c)) {
                cell.flag = CellFlag::Unphysical;
            } else {
                cell.p_sc = sudden_change_time(c, kind);
                cell.flag = cell.p_sc ? CellFlag::Ok : CellFlag::NoSuddenChange;
            }
            result.cells.push_back(cell);
        }
    }
    return result;
}

} // namespace qcorr
