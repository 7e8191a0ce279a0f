#include "qcorr/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace qcorr {

namespace {

// Uniform in [-1, 1) from the raw engine stream; avoids the
// implementation-defined std::uniform_real_distribution.
double symmetric_unit(std::mt19937_64& rng) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return 2.0 * u - 1.0;
}

constexpr std::array<double, 11> kPGrid = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5,
                                           0.6, 0.7, 0.8, 0.9, 1.0};

struct ItemResult {
    double dC = 0.0;
    double dQ = 0.0;
};

} // namespace

BellVector random_physical_bell(std::mt19937_64& rng) {
    for (;;) {
        const BellVector c{symmetric_unit(rng), symmetric_unit(rng), symmetric_unit(rng)};
        if (is_physical(c)) return c;
    }
}

VerifyReport oracle_equivalence(const VerifyOptions& options) {
    if (options.samples < 0) throw std::invalid_argument("sample count must be non-negative");

    std::mt19937_64 rng(options.seed);
    std::vector<BellVector> states(static_cast<std::size_t>(options.samples));
    for (auto& c : states) c = random_physical_bell(rng);

    constexpr std::array<ChannelKind, 3> kinds = {ChannelKind::PhaseFlip, ChannelKind::BitFlip,
                                                  ChannelKind::BitPhaseFlip};
    const std::size_t total = states.size() * kinds.size() * kPGrid.size();
    std::vector<ItemResult> items(total);

    auto evaluate = [&](std::size_t index) {
        const std::size_t s = index / (kinds.size() * kPGrid.size());
        const std::size_t rest = index % (kinds.size() * kPGrid.size());
        const ChannelKind kind = kinds[rest / kPGrid.size()];
        const double p = kPGrid[rest % kPGrid.size()];

        const CorrelationRecord analytic = evaluate_analytic(states[s], kind, p);

        const Matrix evolved = apply_channel(bell_state_matrix(states[s]), kind, p);
        const double info = mutual_information(evolved);
        const NumericExtremum numeric =
            classical_correlation_numeric(evolved, options.grid_n, options.refine_tol);
        const double discord = info - numeric.value;

        items[index] = {std::abs(analytic.C + options.inject_error - numeric.value),
                        std::abs(analytic.Q + options.inject_error - discord)};
    };

    unsigned n_threads = options.threads > 0 ? static_cast<unsigned>(options.threads)
                                             : std::max(1u, std::thread::hardware_concurrency());
    n_threads = static_cast<unsigned>(
        std::min<std::size_t>(n_threads, std::max<std::size_t>(total, 1)));
    if (n_threads <= 1 || total < 2) {
        for (std::size_t i = 0; i < total; ++i) evaluate(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (unsigned t = 0; t < n_threads; ++t) {
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= total) return;
                    evaluate(i);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    // Ordered reduction keeps the report identical for any thread count.
    VerifyReport report;
    report.samples = options.samples;
    report.evaluations = static_cast<int>(total);
    for (std::size_t i = 0; i < total; ++i) {
        report.max_dC = std::max(report.max_dC, items[i].dC);
        report.max_dQ = std::max(report.max_dQ, items[i].dQ);
        if (items[i].dC > options.tolerance || items[i].dQ > options.tolerance) {
            const std::size_t s = i / (kinds.size() * kPGrid.size());
            const std::size_t rest = i % (kinds.size() * kPGrid.size());
            report.failures.push_back({states[s], kinds[rest / kPGrid.size()],
                                       kPGrid[rest % kPGrid.size()], items[i].dC, items[i].dQ});
        }
    }
    return report;
}

} // namespace qcorr
