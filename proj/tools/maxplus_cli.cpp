// Command-line front end: loads systems from JSON, runs the invariance,
// observer and simulation pipelines, and writes JSON or CSV results.
//
// Exit codes: 0 success, 1 domain errors raised by the algorithms
// (NotConverged, NotSolvable, ...), 2 I/O, specification or dimension
// errors. Errors are reported on stderr as one JSON object.

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "maxplus/invariance.hpp"
#include "maxplus/json_io.hpp"
#include "maxplus/observer.hpp"
#include "maxplus/teg.hpp"

namespace {

using namespace maxplus;
using io::Json;

constexpr int kDomainExit = 1;
constexpr int kInputExit = 2;

int exit_code_for(const Error& e) {
    const std::string& k = e.kind();
    return k == "IoError" || k == "SpecError" || k == "DimensionError" ? kInputExit : kDomainExit;
}

void report_error(const std::string& kind, const std::string& message, Json extra = Json::object()) {
    Json j{{"error", kind}, {"message", message}};
    for (auto& [key, value] : extra.items()) j[key] = value;
    std::cerr << j.dump() << '\n';
}

void emit(const std::string& out, const std::string& text) {
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw IoError("cannot write " + out);
    f << text;
    if (!f) throw IoError("write failed: " + out);
}

Matrix load_matrix(const std::string& path) {
    return io::matrix_from_json(io::read_file(path));
}

// Semimodule JSON, or a bare matrix whose columns are the generators.
Semimodule load_semimodule(const std::string& path) {
    const Json j = io::read_file(path);
    if (j.contains("dim")) return io::semimodule_from_json(j);
    const Matrix m = io::matrix_from_json(j);
    return m.cols() == 0 ? Semimodule(m.rows()) : Semimodule(m);
}

// Congruence JSON, or a bare matrix E standing for ker E.
Congruence load_congruence(const std::string& path) {
    const Json j = io::read_file(path);
    if (j.contains("kernel")) return io::congruence_from_json(j);
    return kernel_of(io::matrix_from_json(j));
}

TegSpec load_teg(const std::string& path) { return io::teg_spec_from_json(io::read_file(path)); }

struct Options {
    std::string a, b, c, f, k, v, gens, teg, out, csv;
    std::size_t max_iter = kDefaultMaxIter;
    std::size_t horizon = 0;
    std::uint64_t seed = 0;
    std::optional<std::int64_t> volume_bound;
    bool observe = false;
    bool extend = false;
    std::string aux_init = "embedding";
};

int invariant_controlled(const Options& o) {
    FixpointOptions fo;
    fo.max_iter = o.max_iter;
    const FixpointReport rep = max_controlled_invariant(load_matrix(o.a), load_matrix(o.b), load_semimodule(o.k), fo);
    emit(o.out, io::dump(io::to_json(rep)));
    if (rep.converged) return 0;
    report_error("NotConverged",
                 "fixpoint iteration did not converge within " + std::to_string(rep.iterations) +
                     " iterations",
                 Json{{"iterations", rep.iterations}, {"limit_found", rep.limit.has_value()}});
    return kDomainExit;
}

int invariant_conditioned(const Options& o) {
    FixpointOptions fo;
    fo.max_iter = o.max_iter;
    const Congruence w = min_conditioned_invariant_closed(load_matrix(o.c), load_matrix(o.a), load_congruence(o.v), fo);
    emit(o.out, io::dump(io::to_json(w)));
    return 0;
}

int observer_synth(const Options& o) {
    const ObserverMatrices obs = synthesize_observer(load_matrix(o.f), load_matrix(o.a), load_matrix(o.c));
    emit(o.out, io::dump(io::to_json(obs)));
    return 0;
}

int volume_verb(const Options& o) {
    emit(o.out, io::dump(io::to_json(volume(load_semimodule(o.gens), o.volume_bound))));
    return 0;
}

int teg_compile(const Options& o) {
    const CompiledTeg teg = compile_teg(load_teg(o.teg));
    Json j = io::to_json(teg);
    if (o.extend) {
        const ExtendedSystem ext = extend_interval_system(teg.abar);
        j["E"] = io::to_json(ext.e);
        j["A"] = io::to_json(ext.a);
        j["C_extended"] = io::to_json(extend_output_matrix(teg.c, ext.map));
    }
    emit(o.out, io::dump(j));
    return 0;
}

int simulate(const Options& o) {
    if (o.horizon < 1) throw SpecError("--horizon must be at least 1");
    const AuxInit init = o.aux_init == "source" ? AuxInit::SourceValue : AuxInit::Embedding;
    const CompiledTeg teg = compile_teg(load_teg(o.teg));
    const ExtendedSystem ext = extend_interval_system(teg.abar);
    const Trajectory sampled = sample_trajectory(teg.abar, teg.c, o.horizon, o.seed);
    const Trajectory traj = extended_trajectory(sampled, ext, teg.c, init);

    std::vector<Vector> z;
    if (o.observe) {
        const Matrix c_ext = extend_output_matrix(teg.c, ext.map);
        FixpointOptions fo;
        fo.max_iter = o.max_iter;
        const Matrix f = o.f.empty()
                             ? min_conditioned_invariant_closed(c_ext, ext.a, kernel_of(ext.e), fo).kernel()
                             : load_matrix(o.f);
        const ObserverMatrices obs = synthesize_observer(f, ext.a, c_ext);
        const std::vector<Vector> ys(traj.outputs.begin(), traj.outputs.end() - 1);
        z = run_observer(obs, traj.states.front(), ys);
    }
    std::ostringstream csv;
    io::write_trajectory_csv(csv, traj.states, traj.outputs, z);
    emit(o.csv.empty() ? o.out : o.csv, csv.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Max-plus invariance, observer and timed event graph toolkit"};
    app.require_subcommand(1);
    Options o;
    std::function<int(const Options&)> action;

    auto out_flag = [&](CLI::App* sub) {
        sub->add_option("--out", o.out, "Output file (stdout when omitted)");
    };
    auto iter_flag = [&](CLI::App* sub) {
        sub->add_option("--max-iter", o.max_iter, "Iteration cap for the fixpoint")->check(CLI::PositiveNumber);
    };

    auto* ic = app.add_subcommand("invariant-controlled", "Maximal (A,B)-controlled invariant inside K");
    ic->add_option("--A", o.a, "State matrix")->required();
    ic->add_option("--B", o.b, "Input matrix")->required();
    ic->add_option("--K", o.k, "Semimodule K (generators)")->required();
    iter_flag(ic);
    out_flag(ic);
    ic->callback([&] { action = invariant_controlled; });

    auto* cc = app.add_subcommand("invariant-conditioned",
                                  "Minimal closed (C,A)-conditioned invariant containing V");
    cc->add_option("--C", o.c, "Output matrix")->required();
    cc->add_option("--A", o.a, "State matrix")->required();
    cc->add_option("--V", o.v, "Congruence V as a kernel")->required();
    iter_flag(cc);
    out_flag(cc);
    cc->callback([&] { action = invariant_conditioned; });

    auto* os = app.add_subcommand("observer-synth", "Greatest (U,V) with F A = U F + V C");
    os->add_option("--F", o.f, "Functional F")->required();
    os->add_option("--A", o.a, "State matrix")->required();
    os->add_option("--C", o.c, "Output matrix")->required();
    out_flag(os);
    os->callback([&] { action = observer_synth; });

    auto* sim = app.add_subcommand("simulate", "Sample an interval TEG and write the trajectory CSV");
    sim->add_option("--teg", o.teg, "TEG specification")->required();
    sim->add_option("--horizon", o.horizon, "Number of steps")->required();
    sim->add_option("--seed", o.seed, "Sampler seed");
    sim->add_flag("--observe", o.observe, "Synthesize an observer and add its z columns");
    sim->add_option("--F", o.f, "Functional to observe (default: computed minimal invariant)");
    sim->add_option("--csv", o.csv, "CSV output file (stdout when omitted)");
    sim->add_option("--aux-init", o.aux_init, "Initial auxiliary values")
        ->check(CLI::IsMember({"embedding", "source"}));
    iter_flag(sim);
    sim->callback([&] { action = simulate; });

    auto* vol = app.add_subcommand("volume", "Number of normalized integer points");
    vol->add_option("--gens", o.gens, "Generators (semimodule or matrix JSON)")->required();
    vol->add_option("--volume-bound", o.volume_bound, "Enumeration box");
    out_flag(vol);
    vol->callback([&] { action = volume_verb; });

    auto* tc = app.add_subcommand("teg-compile", "Interval matrix and output matrix of a TEG");
    tc->add_option("--teg", o.teg, "TEG specification")->required();
    tc->add_flag("--extend", o.extend, "Also emit the extended implicit system");
    out_flag(tc);
    tc->callback([&] { action = teg_compile; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        report_error("UsageError", e.what());
        return kInputExit;
    }

    try {
        return action(o);
    } catch (const NotConverged& e) {
        report_error(e.kind(), e.what(), Json{{"iterations", e.report().iterations}});
        return kDomainExit;
    } catch (const Error& e) {
        report_error(e.kind(), e.what());
        return exit_code_for(e);
    } catch (const nlohmann::json::exception& e) {
        report_error("SpecError", e.what());
        return kInputExit;
    } catch (const std::exception& e) {
        report_error("InternalError", e.what());
        return kInputExit;
    }
}
