// qcorr — classical and quantum correlations of two-qubit states with
// maximally mixed marginals under local flip channels.
//
// Subcommands:
//   point    one (state, channel, p) evaluation with regime and the
//            extremization-free operational measure
//   sweep    correlation trajectory over a p grid, with Q = C crossings
//   surface  sudden-change time over two scanned coefficients
//   verify   randomized closed-form vs matrix-path comparison
//
// Exit codes: 0 ok, 1 usage error, 2 unphysical input, 3 verification failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcorr/dynamics.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/verify.hpp"

namespace {

using nlohmann::json;
using namespace qcorr;

// CSV numeric fields carry 9 significant digits.
std::string fmt9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

struct Options {
    std::string state_text = "0,0,0";
    std::string channel_name = "phase-flip";
    double p = 0.0;
    std::string p_range = "0:1:0.001";
    double fixed = 0.1;
    std::string scan_range = "0:1:0.02";
    int grid_n = 256;
    std::string format = "csv";
    std::string out_path;
    std::uint64_t seed = 42;
    int samples = 100;
    double inject_error = 0.0;
};

ChannelKind parse_channel(const std::string& name) {
    const auto kind = channel_from_string(name);
    if (!kind) {
        throw std::invalid_argument("unknown channel \"" + name +
                                    "\" (expected phase-flip, bit-flip or bit-phase-flip)");
    }
    return *kind;
}

struct Range {
    double start = 0.0, stop = 0.0, step = 0.0;
};

Range parse_range(const std::string& text) {
    Range r;
    char tail = '\0';
    if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &r.start, &r.stop, &r.step, &tail) != 3) {
        throw std::invalid_argument("expected range as start:stop:step (got \"" + text + "\")");
    }
    if (r.step <= 0.0) throw std::invalid_argument("range step must be positive");
    if (r.start > r.stop) throw std::invalid_argument("range start must not exceed stop");
    return r;
}

std::vector<double> make_grid(const Range& r, double lo, double hi) {
    if (r.start < lo || r.stop > hi) {
        std::ostringstream msg;
        msg << "range must lie within [" << lo << ", " << hi << "]";
        throw std::invalid_argument(msg.str());
    }
    std::vector<double> grid;
    for (long i = 0;; ++i) {
        double v = r.start + static_cast<double>(i) * r.step;
        if (v > r.stop + 1e-12) break;
        grid.push_back(std::min(v, r.stop));
    }
    return grid;
}

// Writes to --out or standard output.
class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::invalid_argument("cannot open output file " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

json record_to_json(const CorrelationRecord& rec) {
    return json{{"p", rec.p},
                {"C", rec.C},
                {"Q", rec.Q},
                {"I", rec.I},
                {"chi", rec.chi},
                {"theta_opt", rec.theta_opt},
                {"phi_opt", rec.phi_opt},
                {"branch", rec.branch}};
}

void print_record_row(std::ostream& os, const CorrelationRecord& rec) {
    os << fmt9(rec.p) << ',' << fmt9(rec.C) << ',' << fmt9(rec.Q) << ',' << fmt9(rec.I) << ','
       << fmt9(rec.chi) << ',' << rec.branch << '\n';
}

int cmd_point(const Options& opt) {
    const BellVector state = parse_bell_vector(opt.state_text);
    const ChannelKind kind = parse_channel(opt.channel_name);
    if (opt.p < 0.0 || opt.p > 1.0) throw std::invalid_argument("--p must lie in [0, 1]");

    const CorrelationRecord rec = evaluate_analytic(state, kind, opt.p);
    const RegimeReport regime = classify_regime(state, kind);
    const OperationalMeasure op = operational_discord(state, /*verify=*/true, opt.grid_n);

    Output output(opt.out_path);
    std::ostream& os = output.stream();
    if (opt.format == "json") {
        json doc{{"command", "point"},
                 {"state", {state.c1, state.c2, state.c3}},
                 {"channel", to_string(kind)},
                 {"record", record_to_json(rec)},
                 {"regime", to_string(regime.regime)},
                 {"p_sc", regime.p_sc ? json(*regime.p_sc) : json(nullptr)},
                 {"operational",
                  {{"C", op.C},
                   {"Q", op.Q},
                   {"channel_used", to_string(op.channel_used)},
                   {"delta", *op.verification_delta}}}};
        os << doc.dump(2) << '\n';
    } else {
        os << "# qcorr point\n";
        os << "# state: " << format_bell_vector(state) << '\n';
        os << "# channel: " << to_string(kind) << '\n';
        os << "# regime: " << to_string(regime.regime) << '\n';
        os << "# p_sc: " << (regime.p_sc ? fmt9(*regime.p_sc) : "none") << '\n';
        os << "# operational_channel: " << to_string(op.channel_used) << '\n';
        os << "# operational_C: " << fmt9(op.C) << '\n';
        os << "# operational_Q: " << fmt9(op.Q) << '\n';
        os << "# operational_delta: " << fmt9(*op.verification_delta) << '\n';
        os << "# columns: p,C,Q,I,chi,branch\n";
        print_record_row(os, rec);
    }
    return 0;
}

int cmd_sweep(const Options& opt) {
    const BellVector state = parse_bell_vector(opt.state_text);
    const ChannelKind kind = parse_channel(opt.channel_name);
    const std::vector<double> grid = make_grid(parse_range(opt.p_range), 0.0, 1.0);

    const SweepResult result = sweep(state, kind, grid);
    const RegimeReport regime = classify_regime(state, kind);
    const auto p_sc = sudden_change_time(state, kind);

    Output output(opt.out_path);
    std::ostream& os = output.stream();
    if (opt.format == "json") {
        json samples = json::array();
        for (const auto& rec : result.samples) samples.push_back(record_to_json(rec));
        json doc{{"command", "sweep"},
                 {"state", {state.c1, state.c2, state.c3}},
                 {"channel", to_string(kind)},
                 {"regime", to_string(regime.regime)},
                 {"samples", samples},
                 {"crossings", result.crossings},
                 {"p_sc", p_sc ? json(*p_sc) : json(nullptr)},
                 {"p_sc_detected",
                  result.p_sc_detected ? json(*result.p_sc_detected) : json(nullptr)}};
        os << doc.dump(2) << '\n';
    } else {
        os << "# qcorr sweep\n";
        os << "# state: " << format_bell_vector(state) << '\n';
        os << "# channel: " << to_string(kind) << '\n';
        os << "# regime: " << to_string(regime.regime) << '\n';
        os << "# columns: p,C,Q,I,chi,branch\n";
        for (const auto& rec : result.samples) print_record_row(os, rec);
        os << "# crossings:";
        if (result.crossings.empty()) os << " none";
        for (std::size_t i = 0; i < result.crossings.size(); ++i) {
            os << (i == 0 ? " " : ",") << fmt9(result.crossings[i]);
        }
        os << '\n';
        os << "# p_sc: " << (p_sc ? fmt9(*p_sc) : "none") << '\n';
        os << "# p_sc_detected: "
           << (result.p_sc_detected ? fmt9(*result.p_sc_detected) : "none") << '\n';
    }
    return 0;
}

int cmd_surface(const Options& opt) {
    const ChannelKind kind = parse_channel(opt.channel_name);
    const Range scan = parse_range(opt.scan_range);
    if (scan.start < -1.0 || scan.stop > 1.0) {
        throw std::invalid_argument("scan range must lie within [-1, 1]");
    }
    SurfaceGrid grid{scan.start, scan.stop, scan.step, scan.start, scan.stop, scan.step};
    const SurfaceResult result = surface(kind, opt.fixed, grid);

    const std::string u_name = "c" + std::to_string(result.axis_u);
    const std::string v_name = "c" + std::to_string(result.axis_v);

    Output output(opt.out_path);
    std::ostream& os = output.stream();
    if (opt.format == "json") {
        json cells = json::array();
        for (const auto& cell : result.cells) {
            cells.push_back(json{{u_name, cell.u},
                                 {v_name, cell.v},
                                 {"p_sc", cell.p_sc ? json(*cell.p_sc) : json(nullptr)},
                                 {"flag", to_string(cell.flag)}});
        }
        json doc{{"command", "surface"},
                 {"channel", to_string(kind)},
                 {"fixed_axis", "c" + std::to_string(result.fixed_axis)},
                 {"fixed_value", result.fixed_value},
                 {"cells", cells}};
        os << doc.dump(2) << '\n';
    } else {
        os << "# qcorr surface\n";
        os << "# channel: " << to_string(kind) << '\n';
        os << "# fixed: c" << result.fixed_axis << " = " << fmt9(result.fixed_value) << '\n';
        os << "# columns: " << u_name << ',' << v_name << ",p_sc,flag\n";
        for (const auto& cell : result.cells) {
            os << fmt9(cell.u) << ',' << fmt9(cell.v) << ','
               << (cell.p_sc ? fmt9(*cell.p_sc) : "nan") << ',' << to_string(cell.flag) << '\n';
        }
    }
    return 0;
}

int cmd_verify(const Options& opt) {
    VerifyOptions voptions;
    voptions.samples = opt.samples;
    voptions.seed = opt.seed;
    voptions.grid_n = opt.grid_n;
    voptions.inject_error = opt.inject_error;
    const VerifyReport report = oracle_equivalence(voptions);
    const bool ok = report.passed(voptions.tolerance);

    Output output(opt.out_path);
    std::ostream& os = output.stream();
    if (opt.format == "json") {
        json failures = json::array();
        for (const auto& f : report.failures) {
            failures.push_back(json{{"state", {f.state.c1, f.state.c2, f.state.c3}},
                                    {"channel", to_string(f.kind)},
                                    {"p", f.p},
                                    {"dC", f.dC},
                                    {"dQ", f.dQ}});
        }
        json doc{{"command", "verify"},       {"samples", report.samples},
                 {"seed", opt.seed},          {"grid_n", opt.grid_n},
                 {"evaluations", report.evaluations}, {"max_dC", report.max_dC},
                 {"max_dQ", report.max_dQ},   {"tolerance", voptions.tolerance},
                 {"passed", ok},              {"failures", failures}};
        os << doc.dump(2) << '\n';
    } else {
        os << "# qcorr verify\n";
        os << "# samples: " << report.samples << '\n';
        os << "# seed: " << opt.seed << '\n';
        os << "# grid_n: " << opt.grid_n << '\n';
        os << "# evaluations: " << report.evaluations << '\n';
        os << "# tolerance: " << fmt9(voptions.tolerance) << '\n';
        for (const auto& f : report.failures) {
            os << "# fail: state=" << format_bell_vector(f.state)
               << " channel=" << to_string(f.kind) << " p=" << fmt9(f.p)
               << " dC=" << fmt9(f.dC) << " dQ=" << fmt9(f.dQ) << '\n';
        }
        os << "# columns: max_dC,max_dQ,failures\n";
        os << fmt9(report.max_dC) << ',' << fmt9(report.max_dQ) << ',' << report.failures.size()
           << '\n';
    }
    return ok ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"classical and quantum correlations of two-qubit Bell-diagonal states"
                 " under local flip channels"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "Output format")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
        cmd->add_option("--out", opt.out_path, "Write output to a file instead of stdout");
    };

    CLI::App* point = app.add_subcommand("point", "Evaluate one (state, channel, p) sample");
    point->add_option("--state", opt.state_text, "State coefficients c1,c2,c3")->required();
    point->add_option("--channel", opt.channel_name, "Decoherence channel")->capture_default_str();
    point->add_option("--p", opt.p, "Parametrized time in [0, 1]")->capture_default_str();
    point->add_option("--grid-n", opt.grid_n, "Extremization grid resolution")
        ->capture_default_str();
    add_common(point);

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "Trajectory over a p grid");
    sweep_cmd->add_option("--state", opt.state_text, "State coefficients c1,c2,c3")->required();
    sweep_cmd->add_option("--channel", opt.channel_name, "Decoherence channel")
        ->capture_default_str();
    sweep_cmd->add_option("--p-range", opt.p_range, "Grid as start:stop:step")
        ->capture_default_str();
    add_common(sweep_cmd);

    CLI::App* surface_cmd =
        app.add_subcommand("surface", "Sudden-change time over two scanned coefficients");
    surface_cmd->add_option("--channel", opt.channel_name, "Decoherence channel")
        ->capture_default_str();
    surface_cmd->add_option("--fixed", opt.fixed, "Value of the preserved-axis coefficient")
        ->capture_default_str();
    surface_cmd->add_option("--scan-range", opt.scan_range,
                            "Scanned-coefficient grid as start:stop:step")
        ->capture_default_str();
    add_common(surface_cmd);

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "Randomized closed-form vs matrix-path comparison");
    verify_cmd->add_option("--samples", opt.samples, "Number of random states")
        ->capture_default_str();
    verify_cmd->add_option("--seed", opt.seed, "Random seed")->capture_default_str();
    verify_cmd->add_option("--grid-n", opt.grid_n, "Extremization grid resolution")
        ->capture_default_str();
    verify_cmd
        ->add_option("--inject-error", opt.inject_error,
                     "Offset added to the closed-form C (harness self-test)")
        ->group(""); // hidden

    add_common(verify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (point->parsed()) return cmd_point(opt);
        if (sweep_cmd->parsed()) return cmd_sweep(opt);
        if (surface_cmd->parsed()) return cmd_surface(opt);
        return cmd_verify(opt);
    } catch (const NotAStateError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
