#include "qcorr/correlations.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "qcorr/errors.hpp"

namespace qcorr {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kPi = std::numbers::pi;

double clamp_small_negative(double v, double tol = 1e-12) {
    return (v < 0.0 && v >= -tol) ? 0.0 : v;
}

} // namespace

Matrix projector_parallel(const MeasurementBasis& basis) {
    const double ct = std::cos(basis.theta);
    const double st = std::sin(basis.theta);
    const Complex ph = std::polar(1.0, basis.phi);
    Matrix m(2);
    m(0, 0) = ct * ct;
    m(0, 1) = ct * st * std::conj(ph);
    m(1, 0) = ct * st * ph;
    m(1, 1) = st * st;
    return m;
}

Matrix projector_perp(const MeasurementBasis& basis) {
    return Matrix::identity(2) - projector_parallel(basis);
}

double mutual_information(const Matrix& rho) {
    validate_density(rho);
    const double s_ab = shannon_entropy_bits(hermitian_eigenvalues(rho));
    const double s_a = von_neumann_entropy(detail::partial_trace_raw(rho, Subsystem::A));
    const double s_b = von_neumann_entropy(detail::partial_trace_raw(rho, Subsystem::B));
    return clamp_small_negative(s_a + s_b - s_ab, 1e-10);
}

double conditional_entropy(const Matrix& rho, const MeasurementBasis& basis) {
    validate_density(rho);
    const Matrix id2 = Matrix::identity(2);
    double sum = 0.0;
    for (const Matrix& proj : {projector_parallel(basis), projector_perp(basis)}) {
        const Matrix pi = tensor(id2, proj); // measurement acts on B
        const Matrix measured = pi * rho * pi;
        const double q = measured.trace().real();
        if (q < 1e-14) continue;
        Matrix cond = detail::partial_trace_raw(measured, Subsystem::A);
        cond *= 1.0 / q;
        const auto eigs = detail::eig2(cond);
        sum += q * shannon_entropy_bits(eigs);
    }
    return sum;
}

ConditionalSpectrum conditional_spectrum_analytic(const EvolvedCoefficients& e,
                                                  const MeasurementBasis& basis) {
    spectrum_from_coefficients(e); // physicality gate
    const double a2 = e.alpha * e.alpha;
    const double b2 = e.beta * e.beta;
    const double g2 = e.gamma * e.gamma;
    const double s2t = std::sin(2.0 * basis.theta);
    double radicand = 2.0 * g2 + a2 + b2 + (2.0 * g2 - a2 - b2) * std::cos(4.0 * basis.theta) +
                      2.0 * (a2 - b2) * std::cos(2.0 * basis.phi) * s2t * s2t;
    if (radicand < 0.0) {
        if (radicand < -1e-14) {
            throw std::logic_error("conditional spectrum radicand went negative");
        }
        radicand = 0.0;
    }
    const double root = std::sqrt(radicand);
    return {0.25 * (2.0 + root), 0.25 * (2.0 - root), 0.5, 0.5};
}

// --------------------------- numeric extremization ---------------------------

namespace {

// Objective S(rho_A) - sum_j q_j S(rho_A^j) expressed through the four
// Pauli-contracted partial traces T_k = Tr_B[rho (1 (x) sigma_k)]. For the
// projector with Bloch direction n the unnormalized conditional operator of A
// is (T_0 + sum_k n_k T_k) / 2, which makes a grid cell a handful of flops.
struct MeasuredObjective {
    // Half-contractions T_k / 2, stored entrywise so that the unnormalized
    // conditional operator is a plain signed sum.
    double h0_00, h0_11;
    Complex h0_01;
    double hk_00[3], hk_11[3];
    Complex hk_01[3];
    double s_a;

    explicit MeasuredObjective(const Matrix& rho, double s_a_bits) : s_a(s_a_bits) {
        const Matrix id2 = Matrix::identity(2);
        auto contract = [&](const Matrix& op, double& m00, double& m11, Complex& m01) {
            const Matrix t = detail::partial_trace_raw(rho * tensor(id2, op), Subsystem::A);
            m00 = 0.5 * t(0, 0).real();
            m11 = 0.5 * t(1, 1).real();
            m01 = 0.5 * t(0, 1);
        };
        contract(id2, h0_00, h0_11, h0_01);
        for (int k = 0; k < 3; ++k) contract(pauli(k + 1), hk_00[k], hk_11[k], hk_01[k]);
    }

    double value(double theta, double phi) const {
        const double s2t = std::sin(2.0 * theta);
        const double n[3] = {s2t * std::cos(phi), s2t * std::sin(phi), std::cos(2.0 * theta)};
        return value_direction(n);
    }

    double value_direction(const double n[3]) const {
        double cond = 0.0;
        for (double sign : {1.0, -1.0}) {
            double t00 = h0_00, t11 = h0_11;
            Complex t01 = h0_01;
            for (int k = 0; k < 3; ++k) {
                t00 += sign * n[k] * hk_00[k];
                t11 += sign * n[k] * hk_11[k];
                t01 += sign * n[k] * hk_01[k];
            }
            const double q = t00 + t11; // outcome probability
            if (q < 1e-14) continue;
            const double half = 0.5 * (t00 - t11);
            const double r = std::sqrt(half * half + std::norm(t01));
            const double hi = (0.5 * q + r) / q;
            const double lo = (0.5 * q - r) / q;
            cond += q * (-xlog2x(hi) - xlog2x(lo < 0.0 ? 0.0 : lo));
        }
        return s_a - cond;
    }
};

// Golden-section maximization on [lo, hi]; returns the best argument and
// stores the best value. The objective is smooth, so the interval width maps
// quadratically to value error.
template <typename F>
double golden_max(const F& f, double lo, double hi, double& best_value) {
    constexpr double invphi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > 1e-11) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        }
    }
    const double mid = 0.5 * (a + b);
    best_value = f(mid);
    return mid;
}

// The objective is pi/2-periodic and even in theta, pi-periodic in phi; fold
// an unconstrained line-search result back into the canonical patch.
double fold(double angle, double period) {
    double v = std::fmod(angle, period);
    if (v < 0.0) v += period;
    return v;
}

NumericExtremum maximize(const MeasuredObjective& objective, int grid_n, double refine_tol) {
    if (grid_n < 32) throw std::invalid_argument("grid_n must be at least 32");

    const double theta_step = kHalfPi / (grid_n - 1);
    const double phi_step = kPi / grid_n;

    // Exhaustive scan of [0, pi/2] x [0, pi); ties keep the first (lowest
    // lexicographic) cell. Trig is hoisted out of the inner loop.
    std::vector<double> cos_phi(grid_n), sin_phi(grid_n);
    for (int j = 0; j < grid_n; ++j) {
        cos_phi[j] = std::cos(j * phi_step);
        sin_phi[j] = std::sin(j * phi_step);
    }
    double best = -1.0;
    double best_theta = 0.0, best_phi = 0.0;
    for (int i = 0; i < grid_n; ++i) {
        const double theta = i * theta_step;
        const double s2t = std::sin(2.0 * theta);
        const double c2t = std::cos(2.0 * theta);
        for (int j = 0; j < grid_n; ++j) {
            const double n[3] = {s2t * cos_phi[j], s2t * sin_phi[j], c2t};
            const double v = objective.value_direction(n);
            if (v > best) {
                best = v;
                best_theta = theta;
                best_phi = j * phi_step;
            }
        }
    }

    // Alternating golden-section refinement around the winning cell.
    for (int round = 0; round < 200; ++round) {
        const double before = best;
        double v_theta = 0.0;
        best_theta = golden_max(
            [&](double t) { return objective.value(t, best_phi); },
            best_theta - theta_step, best_theta + theta_step, v_theta);
        double v_phi = 0.0;
        best_phi = golden_max(
            [&](double ph) { return objective.value(best_theta, ph); },
            best_phi - phi_step, best_phi + phi_step, v_phi);
        best = std::max({best, v_theta, v_phi});
        if (best - before < refine_tol) break;
    }

    // Fold the refined angles back into [0, pi/2] x [0, pi); the objective is
    // even and pi/2-periodic in theta, pi-periodic in phi.
    double theta = std::abs(best_theta);
    if (theta > kHalfPi) theta = kPi - theta;
    return {clamp_small_negative(best, 1e-10), {theta, fold(best_phi, kPi)}};
}

} // namespace

NumericExtremum classical_correlation_numeric(const Matrix& rho, int grid_n, double refine_tol) {
    validate_density(rho);
    const Matrix rho_a = detail::partial_trace_raw(rho, Subsystem::A);
    const Matrix rho_b = detail::partial_trace_raw(rho, Subsystem::B);
    const Matrix half = 0.5 * Matrix::identity(2);
    if (max_abs_diff(rho_a, half) > 1e-9 || max_abs_diff(rho_b, half) > 1e-9) {
        throw UnsupportedStateError(
            "marginals are not maximally mixed; use classical_correlation_general");
    }
    return maximize(MeasuredObjective(rho, 1.0), grid_n, refine_tol);
}

NumericExtremum classical_correlation_general(const Matrix& rho, int grid_n, double refine_tol) {
    validate_density(rho);
    const double s_a = von_neumann_entropy(detail::partial_trace_raw(rho, Subsystem::A));
    return maximize(MeasuredObjective(rho, s_a), grid_n, refine_tol);
}

// ------------------------------ closed forms --------------------------------

AnalyticCorrelation classical_correlation_analytic(const EvolvedCoefficients& e) {
    const double a = std::abs(e.alpha);
    const double b = std::abs(e.beta);
    const double g = std::abs(e.gamma);
    // tie preference 3 > 1 > 2
    int branch;
    double chi;
    if (g >= a && g >= b) {
        branch = 3;
        chi = g;
    } else if (a >= b) {
        branch = 1;
        chi = a;
    } else {
        branch = 2;
        chi = b;
    }
    // C = (1-chi)/2 log2(1-chi) + (1+chi)/2 log2(1+chi), with 0 log 0 = 0
    const double c = 0.5 * xlog2x(1.0 - chi) + 0.5 * xlog2x(1.0 + chi);
    return {clamp_small_negative(c), chi, branch};
}

double quantum_discord_analytic(const EvolvedCoefficients& e) {
    const Spectrum lams = spectrum_from_coefficients(e);
    double sum = 0.0;
    for (double lam : lams) sum += xlog2x(lam < 0.0 ? 0.0 : lam);
    const double q = 2.0 + sum - classical_correlation_analytic(e).value;
    return clamp_small_negative(q, 1e-10);
}

MeasurementBasis branch_angles(int branch) {
    switch (branch) {
        case 1: return {kHalfPi / 2.0, 0.0};
        case 2: return {kHalfPi / 2.0, kHalfPi};
        case 3: return {0.0, 0.0};
        default: throw std::invalid_argument("branch must be 1, 2 or 3");
    }
}

CorrelationRecord evaluate_analytic(const BellVector& c, ChannelKind kind, double p) {
    const EvolvedCoefficients e = evolve_coefficients(c, kind, p);
    const Spectrum lams = spectrum_from_coefficients(e);
    double sum = 0.0;
    for (double lam : lams) sum += xlog2x(lam < 0.0 ? 0.0 : lam);
    const double info = clamp_small_negative(2.0 + sum, 1e-10);
    const AnalyticCorrelation cc = classical_correlation_analytic(e);
    const MeasurementBasis angles = branch_angles(cc.branch);
    CorrelationRecord rec;
    rec.p = p;
    rec.C = cc.value;
    rec.Q = clamp_small_negative(info - cc.value, 1e-10);
    rec.I = info;
    rec.chi = cc.chi;
    rec.theta_opt = angles.theta;
    rec.phi_opt = angles.phi;
    rec.branch = cc.branch;
    return rec;
}

} // namespace qcorr
