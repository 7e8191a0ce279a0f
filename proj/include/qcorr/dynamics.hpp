#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcorr/correlations.hpp"

namespace qcorr {

enum class Regime { ConstantClassical, SuddenChange, MonotonicDecay };

// "i", "ii", "iii"
const char* to_string(Regime regime);

struct RegimeReport {
    Regime regime = Regime::MonotonicDecay;
    std::optional<double> p_sc;        // present only for regime ii
    std::optional<int> constant_axis;  // present only for regime i
    std::string description;
};

struct SweepResult {
    ChannelKind channel = ChannelKind::PhaseFlip;
    BellVector state;
    std::vector<CorrelationRecord> samples;   // strictly increasing in p
    std::vector<double> crossings;            // p where Q = C (interpolated)
    std::optional<double> p_sc_detected;      // branch-change location on the grid
};

enum class CellFlag { Ok, NoSuddenChange, Unphysical };
const char* to_string(CellFlag flag);

struct SurfaceCell {
    double u = 0.0; // first scanned coefficient
    double v = 0.0; // second scanned coefficient
    std::optional<double> p_sc;
    CellFlag flag = CellFlag::Ok;
};

struct SurfaceResult {
    ChannelKind channel = ChannelKind::PhaseFlip;
    double fixed_value = 0.0;
    int fixed_axis = 3;          // coefficient index held fixed (the flip axis)
    int axis_u = 1, axis_v = 2;  // scanned coefficient indices
    std::vector<SurfaceCell> cells; // row-major, u outer, v inner
};

struct SurfaceGrid {
    double u_start = 0.0, u_stop = 1.0, u_step = 0.02;
    double v_start = 0.0, v_stop = 1.0, v_step = 0.02;
};

// p_SC = 1 - sqrt(|c_axis| / max of the other two magnitudes), where axis is
// the channel's preserved direction. Empty when the formula leaves (0, 1) or
// the state is not in the sudden-change regime.
std::optional<double> sudden_change_time(const BellVector& c, ChannelKind kind);

// Regime i: preserved-axis magnitude dominates (C constant, Q decays).
// Regime ii: another axis dominates and the preserved one is nonzero.
// Regime iii: preserved-axis coefficient is exactly zero.
RegimeReport classify_regime(const BellVector& c, ChannelKind kind);

// True iff both measurement projectors commute with every B-side Kraus
// operator (checked at p = 1/2; the p = 0 set is trivially degenerate).
bool commutation_condition(const MeasurementBasis& basis, ChannelKind kind);

struct OperationalMeasure {
    double Q = 0.0;
    double C = 0.0;
    ChannelKind channel_used = ChannelKind::PhaseFlip;
    // |C - numeric extremization at p = 0|, filled in verification mode.
    std::optional<double> verification_delta;
};

// Extremization-free measure: pick the channel whose preserved axis carries
// the largest |c_i| (ties 3 > 1 > 2), then C = I at p = 1 and Q = I - C.
// verify runs the grid extremization at p = 0 and reports the discrepancy.
OperationalMeasure operational_discord(const BellVector& c, bool verify = false,
                                       int grid_n = 256);

// Analytic trajectory over a sorted p grid, with Q = C crossings located by
// linear interpolation and the branch-change point of chi recorded.
SweepResult sweep(const BellVector& c, ChannelKind kind, const std::vector<double>& p_grid);

// p_SC over the two scanned coefficients with the flip-axis value held fixed.
SurfaceResult surface(ChannelKind kind, double fixed_value, const SurfaceGrid& grid);

} // namespace qcorr
