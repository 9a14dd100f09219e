/*
   Copyright 2026 The polhist authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// polhist CLI: decompose calibration matrices, simulate history states,
// print time averages, estimate entangling power, run the self-check
// battery. All numeric output is deterministic for fixed inputs/seed.

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "polhist/calibration.hpp"
#include "polhist/evolution.hpp"
#include "polhist/fixtures.hpp"
#include "polhist/history.hpp"
#include "polhist/verify.hpp"

namespace {

using namespace polhist;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

std::string g_command_echo;

std::string fmt(double v) { return format_number(v); }

/// Bundled measured trajectories, or the document named by the
/// POLHIST_FIXTURES override.
std::vector<MeasuredTrajectory> fixture_suite() {
    const char* env = std::getenv("POLHIST_FIXTURES");
    if (env == nullptr || *env == '\0') return bundled_fixtures();
    return load_measured(env);
}

/// FNV-1a 64-bit digest of a file's bytes, for the run report.
std::string file_digest(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    std::uint64_t h = 1469598103934665603ULL;
    char c;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void print_matrix(std::ostream& os, const std::string& name, const Mat4& m) {
    os << name << ":\n";
    for (int r = 0; r < 4; ++r) {
        os << " ";
        for (int c = 0; c < 4; ++c) os << " " << fmt(m(r, c));
        os << "\n";
    }
}

void print_unitary(std::ostream& os, const std::string& name, const Mat2c& u) {
    os << name << ":\n";
    for (int r = 0; r < 2; ++r) {
        os << " ";
        for (int c = 0; c < 2; ++c) {
            const complexd v = u(r, c);
            os << "  (" << fmt(v.real()) << ", " << fmt(v.imag()) << ")";
        }
        os << "\n";
    }
}

void print_warnings(const CalibrationTable& table) {
    for (const auto& w : table.warnings) std::cerr << "warning: " << w << "\n";
}

struct CommonOptions {
    std::uint64_t seed = 1;
    int samples = 1000;
    double min_norm = 0.9;
    bool lenient = false;

    Physicality mode() const {
        return lenient ? Physicality::Lenient : Physicality::Strict;
    }
};

struct DecomposeArgs {
    std::string calibration;
    int gray = 0;
};

int run_decompose(const DecomposeArgs& args, const CommonOptions& common) {
    const CalibrationTable table = load_calibration(args.calibration, common.mode());
    print_warnings(table);
    const MuellerMatrix& m = table.at(args.gray);
    const LuChipmanFactors f = lu_chipman(m);
    std::cout << "gray level " << args.gray << "\n";
    print_matrix(std::cout, "input", m.matrix());
    print_matrix(std::cout, "depolarizer", f.depolarizer.matrix());
    print_matrix(std::cout, "retarder", f.retarder.matrix());
    print_matrix(std::cout, "diattenuator", f.diattenuator.matrix());
    std::cout << "residual: " << fmt(f.residual) << "\n";
    print_unitary(std::cout, "unitary", retarder_to_unitary(f.retarder).matrix());
    return kExitOk;
}

struct SimulateArgs {
    std::string trajectory;
    std::string calibration;
    std::string label;
    std::string initial;  // optional "S0 S1 S2 S3" override
    std::string out_prefix;
};

StokesVector parse_stokes_arg(const std::string& text) {
    std::istringstream in(text);
    double s[4];
    for (double& v : s)
        if (!(in >> v)) throw ParseError("--initial needs four Stokes components");
    return StokesVector(s[0], s[1], s[2], s[3]);
}

const TrajectorySpec& select_spec(const std::vector<TrajectorySpec>& specs,
                                  const std::string& label) {
    if (label.empty()) return specs.front();
    for (const auto& s : specs)
        if (s.label == label) return s;
    throw ParseError("no trajectory labeled '" + label + "' in the document");
}

int run_simulate(const SimulateArgs& args, const CommonOptions& common) {
    const auto started = std::chrono::steady_clock::now();

    const auto specs = load_trajectories(args.trajectory);
    const TrajectorySpec& spec = select_spec(specs, args.label);
    const CalibrationTable table = load_calibration(args.calibration, common.mode());
    print_warnings(table);

    const StokesVector initial =
        args.initial.empty() ? spec.initial : parse_stokes_arg(args.initial);
    const PureQubit psi0 = purify(stokes_to_bloch(initial), common.min_norm);
    const EvolutionOperator w = resolve_unitaries(spec, table);
    const HistoryState history = make_history(psi0, w.unitaries());

    std::ofstream bloch(args.out_prefix + ".bloch.csv", std::ios::binary);
    if (!bloch) throw ParseError("cannot write '" + args.out_prefix + ".bloch.csv'");
    bloch << "t,x,y,z\n";
    for (int t = 0; t < history.n_clock(); ++t) {
        const BlochVector r = history.conditional_state(t).bloch();
        bloch << t << "," << fmt(r.x()) << "," << fmt(r.y()) << "," << fmt(r.z()) << "\n";
    }

    const EntropyCurve curve = entropy_curve(history);
    std::ofstream entropy(args.out_prefix + ".entropy.csv", std::ios::binary);
    if (!entropy) throw ParseError("cannot write '" + args.out_prefix + ".entropy.csv'");
    entropy << "n,entropy_bits,quadratic_entropy\n";
    for (const auto& p : curve.points)
        entropy << p.n << "," << fmt(p.von_neumann_bits) << "," << fmt(p.quadratic) << "\n";

    ordered_json report;
    report["command"] = "simulate";
    report["inputs"] = {{"trajectory", file_digest(args.trajectory)},
                        {"calibration", file_digest(args.calibration)}};
    report["results"] = {
        {"label", spec.label},
        {"n_steps", history.n_clock()},
        {"entropy_final_bits", curve.points.back().von_neumann_bits},
        {"quadratic_final", curve.points.back().quadratic},
        {"time_average_x", time_average(history, Axis::X)},
        {"time_average_y", time_average(history, Axis::Y)},
        {"time_average_z", time_average(history, Axis::Z)},
    };
    report["warnings"] = table.warnings;
    report["wall_time_s"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    std::ofstream rep(args.out_prefix + ".report.json", std::ios::binary);
    if (!rep) throw ParseError("cannot write '" + args.out_prefix + ".report.json'");
    rep << report.dump(2) << "\n";

    std::cout << "wrote " << args.out_prefix << ".bloch.csv, " << args.out_prefix
              << ".entropy.csv, " << args.out_prefix << ".report.json\n";
    return kExitOk;
}

struct AveragesArgs {
    int fixture = 0;  // 1..7 when set
    std::string measured;
    std::string trajectory;
    std::string calibration;
    std::string label;
    std::string axes = "xyz";
};

HistoryState averages_history(const AveragesArgs& args, const CommonOptions& common) {
    if (args.fixture > 0) return trajectory_to_history(bundled_fixture(args.fixture), common.min_norm);
    if (!args.measured.empty()) {
        const auto measured = load_measured(args.measured);
        for (const auto& m : measured)
            if (args.label.empty() || m.label == args.label)
                return trajectory_to_history(m, common.min_norm);
        throw ParseError("no measured trajectory labeled '" + args.label + "'");
    }
    if (!args.trajectory.empty()) {
        if (args.calibration.empty())
            throw ParseError("--trajectory needs --calibration to resolve unitaries");
        const auto specs = load_trajectories(args.trajectory);
        const TrajectorySpec& spec = select_spec(specs, args.label);
        const CalibrationTable table = load_calibration(args.calibration, common.mode());
        print_warnings(table);
        const PureQubit psi0 = purify(stokes_to_bloch(spec.initial), common.min_norm);
        return make_history(psi0, resolve_unitaries(spec, table).unitaries());
    }
    throw ParseError("averages needs one of --fixture, --measured or --trajectory");
}

int run_averages(const AveragesArgs& args, const CommonOptions& common) {
    const HistoryState history = averages_history(args, common);
    for (char axis_char : args.axes) {
        Axis axis;
        switch (axis_char) {
            case 'x': axis = Axis::X; break;
            case 'y': axis = Axis::Y; break;
            case 'z': axis = Axis::Z; break;
            default: throw ParseError(std::string("unknown axis '") + axis_char + "'");
        }
        // Both routes, printed with their (assertion-bounded) difference.
        const int n = history.n_clock();
        double sequential = 0.0;
        for (int t = 0; t < n; ++t)
            sequential += pauli_expectation(history.conditional_state(t), axis);
        sequential /= n;
        const double global = pauli_expectation(reduced_system(history, n), axis);
        const double common_value = time_average(history, axis);
        std::cout << "axis " << axis_char << ": sequential = " << fmt(sequential)
                  << "  global = " << fmt(global)
                  << "  |difference| = " << fmt(std::abs(sequential - global))
                  << "  value = " << fmt(common_value) << "\n";
    }
    return kExitOk;
}

struct EntanglingArgs {
    std::string calibration;
    std::string trajectory;
    std::string label;
};

int run_entangling_power(const EntanglingArgs& args, const CommonOptions& common) {
    std::vector<Unitary2> unitaries;
    if (!args.calibration.empty()) {
        const CalibrationTable table = load_calibration(args.calibration, common.mode());
        print_warnings(table);
        if (!args.trajectory.empty()) {
            const auto specs = load_trajectories(args.trajectory);
            const TrajectorySpec& spec = select_spec(specs, args.label);
            unitaries = resolve_unitaries(spec, table).unitaries();
        } else {
            // Whole table, ascending gray order.
            for (const auto& e : table.entries)
                unitaries.push_back(retarder_to_unitary(lu_chipman(e.matrix).retarder));
        }
    } else {
        throw ParseError("entangling-power needs --calibration (optionally with --trajectory)");
    }

    const EvolutionOperator w(std::move(unitaries));
    const double mc = entangling_power_mc(w, common.samples, common.seed);
    const double closed = (2.0 / 3.0) * operator_entanglement(w);
    std::cout << "n_unitaries = " << w.size() << "\n";
    std::cout << "samples = " << common.samples << "  seed = " << common.seed << "\n";
    std::cout << "mc_estimate = " << fmt(mc) << "\n";
    std::cout << "closed_form = " << fmt(closed) << "\n";
    std::cout << "deviation = " << fmt(std::abs(mc - closed)) << "\n";
    return kExitOk;
}

struct VerifyArgs {
    bool verbose = false;
    std::uint64_t seed = VerifyOptions{}.seed;
};

int run_verify(const VerifyArgs& args) {
    VerifyOptions options;
    options.verbose = args.verbose;
    options.seed = args.seed;
    const auto results = run_verification(bundled_fixtures(), options);
    for (const auto& r : results)
        std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.name
                  << (r.detail.empty() ? "" : "  [" + r.detail + "]") << "\n";
    if (all_passed(results)) {
        std::cout << "all " << results.size() << " checks passed\n";
        return kExitOk;
    }
    return kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polarization history-state toolkit"};
    app.require_subcommand(1);

    CommonOptions common;

    DecomposeArgs decompose_args;
    CLI::App* decompose = app.add_subcommand(
        "decompose", "Lu-Chipman factors and the extracted unitary for one gray level");
    decompose->add_option("--calibration", decompose_args.calibration, "calibration document")
        ->required();
    decompose->add_option("--gray", decompose_args.gray, "gray level")->required();
    decompose->add_flag("--lenient,!--strict", common.lenient, "relax (or enforce, default) the physicality screen");

    SimulateArgs simulate_args;
    CLI::App* simulate = app.add_subcommand(
        "simulate", "build a history state from a trajectory spec and emit CSV datasets");
    simulate->add_option("--trajectory", simulate_args.trajectory, "trajectory document")
        ->required();
    simulate->add_option("--calibration", simulate_args.calibration, "calibration document")
        ->required();
    simulate->add_option("--label", simulate_args.label, "trajectory label (default: first)");
    simulate->add_option("--initial", simulate_args.initial,
                         "override initial Stokes state: \"S0 S1 S2 S3\"");
    simulate->add_option("--out", simulate_args.out_prefix, "output file prefix")->required();
    simulate->add_option("--min-norm", common.min_norm, "purification threshold");
    simulate->add_flag("--lenient,!--strict", common.lenient, "relax (or enforce, default) the physicality screen");

    AveragesArgs averages_args;
    CLI::App* averages = app.add_subcommand(
        "averages", "time-averaged Pauli expectations, sequential and global routes");
    averages->add_option("--fixture", averages_args.fixture, "bundled trajectory number (1-7)");
    averages->add_option("--measured", averages_args.measured, "measured-trajectory document");
    averages->add_option("--trajectory", averages_args.trajectory, "trajectory document");
    averages->add_option("--calibration", averages_args.calibration, "calibration document");
    averages->add_option("--label", averages_args.label, "trajectory label");
    averages->add_option("--axes", averages_args.axes, "axes to print (subset of xyz)");
    averages->add_option("--min-norm", common.min_norm, "purification threshold");
    averages->add_flag("--lenient,!--strict", common.lenient, "relax (or enforce, default) the physicality screen");

    EntanglingArgs entangling_args;
    CLI::App* entangling = app.add_subcommand(
        "entangling-power", "Monte-Carlo entangling power against the closed form");
    entangling->add_option("--calibration", entangling_args.calibration, "calibration document");
    entangling->add_option("--trajectory", entangling_args.trajectory,
                           "restrict to one trajectory's gray levels");
    entangling->add_option("--label", entangling_args.label, "trajectory label");
    entangling->add_option("--samples", common.samples, "Monte-Carlo samples");
    entangling->add_option("--seed", common.seed, "random seed");
    entangling->add_flag("--lenient,!--strict", common.lenient, "relax (or enforce, default) the physicality screen");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "run the self-check battery");
    verify->add_flag("--verbose", verify_args.verbose, "per-trajectory entropy lines");
    verify->add_option("--seed", verify_args.seed, "random seed for the battery");

    CLI11_PARSE(app, argc, argv);

    try {
        if (decompose->parsed()) return run_decompose(decompose_args, common);
        if (simulate->parsed()) return run_simulate(simulate_args, common);
        if (averages->parsed()) return run_averages(averages_args, common);
        if (entangling->parsed()) return run_entangling_power(entangling_args, common);
        if (verify->parsed()) return run_verify(verify_args);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
