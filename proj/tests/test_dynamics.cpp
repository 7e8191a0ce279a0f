#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "qcorr/dynamics.hpp"
#include "qcorr/errors.hpp"
#include "support/random_bell.hpp"

using namespace qcorr;

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;
constexpr double kHalfPi = std::numbers::pi / 2.0;

// Frozen root-finder values for c = (0.06, 0.42, 0.30) under phase flip.
constexpr double kPsc = 0.15484574527148342;       // 1 - sqrt(0.30/0.42)
constexpr double kCross1 = 0.09332042020477267;    // first Q = C crossing
constexpr double kCross2 = 0.19760748933405157;    // second Q = C crossing

// Operational-measure reference for (0.1, 0.1, 0.5).
constexpr double kC05 = 0.18872187554086714;       // C at chi = 0.5
constexpr double kQop = 0.02967727519232685;       // I - C

std::vector<double> linear_grid(double step) {
    std::vector<double> grid;
    for (long i = 0;; ++i) {
        const double p = static_cast<double>(i) * step;
        if (p > 1.0 + 1e-12) break;
        grid.push_back(std::min(p, 1.0));
    }
    return grid;
}

BellVector sorted_for_regime_i(BellVector c, int axis) {
    // reorder magnitudes so the preserved axis carries the largest one
    double v[3] = {std::abs(c.c1), std::abs(c.c2), std::abs(c.c3)};
    std::swap(v[axis - 1], *std::max_element(v, v + 3));
    return {c.c1 < 0 ? -v[0] : v[0], c.c2 < 0 ? -v[1] : v[1], c.c3 < 0 ? -v[2] : v[2]};
}

} // namespace

TEST_CASE("sudden_change_time: figure state and index swaps") {
    const auto p_sc = sudden_change_time({0.06, 0.42, 0.30}, ChannelKind::PhaseFlip);
    REQUIRE(p_sc.has_value());
    CHECK(*p_sc == doctest::Approx(kPsc).epsilon(1e-15));
    CHECK(*p_sc >= 0.150);
    CHECK(*p_sc <= 0.160);

    const auto swapped = sudden_change_time({0.30, 0.42, 0.06}, ChannelKind::BitFlip);
    REQUIRE(swapped.has_value());
    CHECK(*swapped == doctest::Approx(kPsc).epsilon(1e-15));

    const auto swapped2 = sudden_change_time({0.06, 0.30, 0.42}, ChannelKind::BitPhaseFlip);
    REQUIRE(swapped2.has_value());
    CHECK(*swapped2 == doctest::Approx(kPsc).epsilon(1e-15));
}

TEST_CASE("sudden_change_time: none outside regime ii") {
    CHECK(!sudden_change_time({0.1, 0.1, 0.5}, ChannelKind::PhaseFlip));   // regime i
    CHECK(!sudden_change_time({0.5, 0.3, 0.0}, ChannelKind::PhaseFlip));   // regime iii
    CHECK(!sudden_change_time({0.3, 0.2, 0.3}, ChannelKind::PhaseFlip));   // boundary tie
    CHECK(!sudden_change_time({0.0, 0.0, 0.0}, ChannelKind::PhaseFlip));
}

TEST_CASE("classify_regime: all three kinds") {
    const RegimeReport ii = classify_regime({0.06, 0.42, 0.30}, ChannelKind::PhaseFlip);
    CHECK(ii.regime == Regime::SuddenChange);
    REQUIRE(ii.p_sc.has_value());
    CHECK(*ii.p_sc == doctest::Approx(kPsc).epsilon(1e-15));
    CHECK(!ii.constant_axis);

    const RegimeReport i = classify_regime({0.2, 0.1, 0.5}, ChannelKind::PhaseFlip);
    CHECK(i.regime == Regime::ConstantClassical);
    CHECK(i.constant_axis == 3);
    CHECK(!i.p_sc);

    const RegimeReport iii = classify_regime({0.5, 0.3, 0.0}, ChannelKind::PhaseFlip);
    CHECK(iii.regime == Regime::MonotonicDecay);

    // boundary tie counts as regime i
    CHECK(classify_regime({0.3, 0.2, 0.3}, ChannelKind::PhaseFlip).regime ==
          Regime::ConstantClassical);

    // index-swapped variants
    CHECK(classify_regime({0.5, 0.1, 0.2}, ChannelKind::BitFlip).regime ==
          Regime::ConstantClassical);
    CHECK(classify_regime({0.0, 0.3, 0.5}, ChannelKind::BitFlip).regime ==
          Regime::MonotonicDecay);
    CHECK(classify_regime({0.2, 0.5, 0.1}, ChannelKind::BitPhaseFlip).regime ==
          Regime::ConstantClassical);
    CHECK(classify_regime({0.42, 0.06, 0.30}, ChannelKind::BitPhaseFlip).regime ==
          Regime::SuddenChange);
}

TEST_CASE("commutation_condition: eigenbases of the flip axis") {
    CHECK(commutation_condition({0.0, 0.0}, ChannelKind::PhaseFlip));
    CHECK(!commutation_condition({0.0, 0.0}, ChannelKind::BitFlip));
    CHECK(!commutation_condition({0.0, 0.0}, ChannelKind::BitPhaseFlip));

    CHECK(commutation_condition({kQuarterPi, 0.0}, ChannelKind::BitFlip));
    CHECK(!commutation_condition({kQuarterPi, 0.0}, ChannelKind::PhaseFlip));

    CHECK(commutation_condition({kQuarterPi, kHalfPi}, ChannelKind::BitPhaseFlip));
    CHECK(!commutation_condition({kQuarterPi, kHalfPi}, ChannelKind::BitFlip));
}

TEST_CASE("operational_discord: reference states") {
    const OperationalMeasure op = operational_discord({0.1, 0.1, 0.5});
    CHECK(op.channel_used == ChannelKind::PhaseFlip);
    CHECK(op.C == doctest::Approx(kC05).epsilon(1e-12));
    CHECK(op.Q == doctest::Approx(kQop).epsilon(1e-12));
    CHECK(std::abs(op.Q - quantum_discord_analytic({0.1, 0.1, 0.5})) <= 1e-9);

    const OperationalMeasure zero = operational_discord({0.0, 0.0, 0.0});
    CHECK(zero.Q == 0.0);
    CHECK(zero.C == 0.0);

    const OperationalMeasure bell = operational_discord({1.0, -1.0, 1.0});
    CHECK(bell.Q == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(bell.C == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("operational_discord: verification mode reports the numeric gap") {
    const OperationalMeasure op = operational_discord({0.1, 0.1, 0.5}, /*verify=*/true);
    REQUIRE(op.verification_delta.has_value());
    CHECK(*op.verification_delta <= 1e-9);
}

TEST_CASE("operational_discord equals the closed form when the dominant axis selects") {
    auto rng = testing::seeded_rng(67);
    int done = 0;
    while (done < 100) {
        const BellVector c = random_physical_bell(rng);
        const OperationalMeasure op = operational_discord(c);
        CHECK(std::abs(op.Q - quantum_discord_analytic({c.c1, c.c2, c.c3})) <= 1e-9);
        ++done;
    }
}

TEST_CASE("sweep: figure state reproduces crossings and the sudden change") {
    const SweepResult result = sweep({0.06, 0.42, 0.30}, ChannelKind::PhaseFlip,
                                     linear_grid(1e-3));
    REQUIRE(result.samples.size() == 1001);
    REQUIRE(result.crossings.size() == 2);
    CHECK(std::abs(result.crossings[0] - kCross1) <= 1e-4);
    CHECK(std::abs(result.crossings[1] - kCross2) <= 1e-4);

    // Q > C strictly between the crossings
    for (const auto& rec : result.samples) {
        if (rec.p > result.crossings[0] + 1e-3 && rec.p < result.crossings[1] - 1e-3) {
            CHECK(rec.Q > rec.C);
        }
    }

    REQUIRE(result.p_sc_detected.has_value());
    CHECK(std::abs(*result.p_sc_detected - kPsc) <= 1e-3); // within one grid step

    // endpoint: fully decohered state has Q = 0 and C = I
    const CorrelationRecord& last = result.samples.back();
    CHECK(last.p == 1.0);
    CHECK(last.Q <= 1e-12);
    CHECK(std::abs(last.C - last.I) <= 1e-12);
}

TEST_CASE("sweep: regime i keeps C constant at the decohered mutual information") {
    const SweepResult result = sweep({0.2, 0.1, 0.5}, ChannelKind::PhaseFlip, linear_grid(1e-2));
    const double c0 = result.samples.front().C;
    for (const auto& rec : result.samples) CHECK(std::abs(rec.C - c0) <= 1e-12);
    CHECK(std::abs(c0 - result.samples.back().I) <= 1e-9);
    CHECK(result.crossings.empty()); // Q < C throughout for this state
    CHECK(!result.p_sc_detected);
}

TEST_CASE("sweep: regime ii slope of Q jumps at the sudden change") {
    const double h = 1e-3;
    const SweepResult result = sweep({0.06, 0.42, 0.30}, ChannelKind::PhaseFlip, linear_grid(h));
    const auto& s = result.samples;

    // C strictly decreasing before p_sc, constant after
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i].p < kPsc) {
            CHECK(s[i].C < s[i - 1].C);
        } else if (s[i - 1].p > kPsc) {
            CHECK(std::abs(s[i].C - s[i - 1].C) <= 1e-12);
        }
    }

    // one-sided slope discontinuity of Q at p_sc, against the smooth baseline
    auto slope_jump = [&](std::size_t i) {
        const double before = (s[i].Q - s[i - 1].Q) / h;
        const double after = (s[i + 1].Q - s[i].Q) / h;
        return std::abs(after - before);
    };
    std::size_t at_psc = 0;
    double baseline = 0.0;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        if (std::abs(s[i].p - kPsc) <= h) {
            at_psc = std::max(at_psc, i);
        } else if (std::abs(s[i].p - kPsc) > 2 * h) {
            baseline = std::max(baseline, slope_jump(i));
        }
    }
    REQUIRE(at_psc > 0);
    const double jump = std::max(slope_jump(at_psc), slope_jump(at_psc - 1));
    CHECK(jump > 10.0 * baseline);
}

TEST_CASE("sweep: monotone mutual information along phase-flip trajectories") {
    auto rng = testing::seeded_rng(71);
    const auto grid = linear_grid(1e-3);
    for (int trial = 0; trial < 5; ++trial) {
        const SweepResult result = sweep(random_physical_bell(rng), ChannelKind::PhaseFlip, grid);
        for (std::size_t i = 1; i < result.samples.size(); ++i) {
            CHECK(result.samples[i].I <= result.samples[i - 1].I + 1e-12);
        }
    }
}

TEST_CASE("sweep: no sudden death of discord in regime ii") {
    auto rng = testing::seeded_rng(73);
    const auto grid = linear_grid(1e-3);
    int done = 0;
    while (done < 5) {
        BellVector c = sorted_for_regime_i(random_physical_bell(rng), 1);
        if (c.c3 == 0.0 || std::abs(c.c3) >= std::abs(c.c1)) continue; // want regime ii
        if (classify_regime(c, ChannelKind::PhaseFlip).regime != Regime::SuddenChange) continue;
        const SweepResult result = sweep(c, ChannelKind::PhaseFlip, grid);
        for (const auto& rec : result.samples) {
            if (rec.p < 1.0) CHECK(rec.Q > 0.0);
        }
        ++done;
    }
}

TEST_CASE("sweep: crossings sit at the pure-state midpoint") {
    const SweepResult result = sweep({0.06, 0.42, 0.30}, ChannelKind::PhaseFlip,
                                     linear_grid(1e-3));
    for (double crossing : result.crossings) {
        const CorrelationRecord rec =
            evaluate_analytic({0.06, 0.42, 0.30}, ChannelKind::PhaseFlip, crossing);
        CHECK(std::abs(rec.Q - rec.I / 2.0) <= 1e-3);
        CHECK(std::abs(rec.C - rec.I / 2.0) <= 1e-3);
    }
}

TEST_CASE("sweep: channel symmetry is exact record-for-record") {
    auto rng = testing::seeded_rng(79);
    const auto grid = linear_grid(0.01);
    for (int trial = 0; trial < 10; ++trial) {
        const BellVector c = random_physical_bell(rng);
        const SweepResult phase = sweep(c, ChannelKind::PhaseFlip, grid);
        const SweepResult bit = sweep({c.c3, c.c2, c.c1}, ChannelKind::BitFlip, grid);
        const SweepResult bitphase = sweep({c.c1, c.c3, c.c2}, ChannelKind::BitPhaseFlip, grid);
        REQUIRE(bit.samples.size() == phase.samples.size());
        REQUIRE(bitphase.samples.size() == phase.samples.size());
        for (std::size_t i = 0; i < phase.samples.size(); ++i) {
            CHECK(std::abs(bit.samples[i].C - phase.samples[i].C) <= 1e-12);
            CHECK(std::abs(bit.samples[i].Q - phase.samples[i].Q) <= 1e-12);
            CHECK(std::abs(bit.samples[i].I - phase.samples[i].I) <= 1e-12);
            CHECK(std::abs(bit.samples[i].chi - phase.samples[i].chi) <= 1e-12);
            CHECK(std::abs(bitphase.samples[i].C - phase.samples[i].C) <= 1e-12);
            CHECK(std::abs(bitphase.samples[i].Q - phase.samples[i].Q) <= 1e-12);
        }
    }
}

TEST_CASE("sweep: rejects malformed grids") {
    CHECK_THROWS_AS(sweep({0.0, 0.0, 0.1}, ChannelKind::PhaseFlip, {0.0, 0.5, 0.5}),
                    std::invalid_argument);
    CHECK_THROWS_AS(sweep({0.0, 0.0, 0.1}, ChannelKind::PhaseFlip, {0.0, 1.5}),
                    std::invalid_argument);
}

TEST_CASE("surface: closed form, flags and the figure cell") {
    const SurfaceResult result = surface(ChannelKind::PhaseFlip, 0.1, {0.0, 1.0, 0.02,
                                                                       0.0, 1.0, 0.02});
    CHECK(result.fixed_axis == 3);
    CHECK(result.axis_u == 1);
    CHECK(result.axis_v == 2);

    for (const auto& cell : result.cells) {
        const double largest = std::max(std::abs(cell.u), std::abs(cell.v));
        if (cell.u + cell.v > 0.9 + 1e-12) {
            CHECK(cell.flag == CellFlag::Unphysical);
        } else if (largest <= 0.1) {
            CHECK(cell.flag == CellFlag::NoSuddenChange);
        } else {
            REQUIRE(cell.flag == CellFlag::Ok);
            CHECK(*cell.p_sc == doctest::Approx(1.0 - std::sqrt(0.1 / largest)).epsilon(1e-15));
        }
    }

    // the (0.06, 0.42) cell
    const auto it = std::find_if(result.cells.begin(), result.cells.end(), [](const auto& cell) {
        return std::abs(cell.u - 0.06) < 1e-9 && std::abs(cell.v - 0.42) < 1e-9;
    });
    REQUIRE(it != result.cells.end());
    REQUIRE(it->p_sc.has_value());
    CHECK(*it->p_sc == doctest::Approx(0.51204996352573341).epsilon(1e-12));
}

TEST_CASE("surface: scanned axes follow the channel") {
    const SurfaceResult bit = surface(ChannelKind::BitFlip, 0.1, {0.0, 0.5, 0.1, 0.0, 0.5, 0.1});
    CHECK(bit.fixed_axis == 1);
    CHECK(bit.axis_u == 2);
    CHECK(bit.axis_v == 3);

    const SurfaceResult bitphase =
        surface(ChannelKind::BitPhaseFlip, 0.1, {0.0, 0.5, 0.1, 0.0, 0.5, 0.1});
    CHECK(bitphase.fixed_axis == 2);
    CHECK(bitphase.axis_u == 1);
    CHECK(bitphase.axis_v == 3);
}
