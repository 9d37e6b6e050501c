// grover-lab: run single search experiments, parameter sweeps, and the
// cross-module invariant suite from the command line.
//
// Exit codes: 0 success (verified), 1 usage or input error, 2 unverified or
// exhausted search, 3 selftest failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "grover_lab/grover_lab.hpp"

namespace {

using namespace grover_lab;

int max_qubits_from_env() {
    if (const char* value = std::getenv("GROVER_LAB_MAX_N")) {
        try {
            const int parsed = std::stoi(value);
            if (parsed >= 1) return parsed;
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring invalid GROVER_LAB_MAX_N='" << value << "'\n";
    }
    return kDefaultMaxQubits;
}

std::vector<std::uint64_t> parse_index_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        out.push_back(std::stoull(token));
    }
    return out;
}

// "8..16" expands to 8,9,...,16; plain comma lists pass through.
std::vector<int> parse_n_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        const auto dots = token.find("..");
        if (dots == std::string::npos) {
            out.push_back(std::stoi(token));
        } else {
            const int lo = std::stoi(token.substr(0, dots));
            const int hi = std::stoi(token.substr(dots + 2));
            for (int v = lo; v <= hi; ++v) out.push_back(v);
        }
    }
    return out;
}

struct InstanceFlags {
    std::string instance;   // inline JSON or a file path
    int n = 0;
    std::string solutions;  // comma-separated indices
    std::uint64_t random_solutions = 0;
};

SearchInstance build_instance(const InstanceFlags& flags, std::uint64_t seed, int max_n) {
    if (!flags.instance.empty()) {
        std::string text = flags.instance;
        if (text.find('{') == std::string::npos) {
            std::ifstream in(text);
            if (!in) raise("bad-instance", "cannot open instance file '" + text + "'");
            std::stringstream buffer;
            buffer << in.rdbuf();
            text = buffer.str();
        }
        Json parsed = Json::parse(text, nullptr, false);
        if (parsed.is_discarded())
            raise("bad-instance", "instance is not valid JSON");
        return instance_from_json(parsed, max_n);
    }
    if (flags.n == 0)
        raise("bad-instance", "specify --instance, or --n with --solutions/--random-solutions");
    if (flags.random_solutions > 0)
        return random_instance(flags.n, flags.random_solutions, substream_seed(seed, 0), max_n);
    if (flags.solutions.empty())
        raise("no-solutions", "specify --solutions or --random-solutions");
    return make_instance(flags.n, parse_index_list(flags.solutions), max_n);
}

int cmd_run(const InstanceFlags& inst_flags, const std::string& mode_name,
            std::optional<std::uint64_t> shots_opt, std::uint64_t seed,
            const std::string& m_max_text, const std::string& order_name,
            const std::string& dump_state_path, int max_n) {
    const Mode mode = mode_from_string(mode_name);
    const SearchInstance inst = build_instance(inst_flags, seed, max_n);

    if (mode == Mode::bounded) {
        BoundedConfig cfg;
        cfg.m_max = m_max_text.empty() ? inst.M()
                                       : parse_m_max_rule(m_max_text).eval(inst.M(), inst.N);
        cfg.shots_per_trial = shots_opt.value_or(1);
        cfg.candidate_order =
            order_name == "desc" ? CandidateOrder::descending : CandidateOrder::ascending;
        cfg.seed = seed;
        const BoundedReport report = run_bounded(inst, cfg);
        std::cout << report_to_json(report).dump(2) << "\n";
        return report.found ? 0 : 2;
    }

    const std::uint64_t shots = shots_opt.value_or(1024);
    RunReport report;
    if (mode == Mode::standard)
        report = run_standard(inst, shots, seed);
    else
        report = run_modified_known_m(inst, shots, seed);

    if (!dump_state_path.empty()) {
        // Re-derive the pre-measurement state for the dump (debug aid, small n).
        StateVector state = uniform_state(inst.n);
        if (mode == Mode::standard) {
            const IterationPlan plan = plan_iterations(inst);
            for (std::uint64_t i = 0; i < plan.I; ++i)
                state = grover_iteration(std::move(state), inst);
        } else {
            state = lift_apply_A(std::move(state), inst, build_operators(inst.M(), inst.N));
        }
        std::ofstream out(dump_state_path);
        if (!out) raise("bad-instance", "cannot write state dump '" + dump_state_path + "'");
        out << state_to_json(state).dump() << "\n";
    }

    std::cout << report_to_json(report).dump(2) << "\n";
    return report.verified ? 0 : 2;
}

int cmd_sweep(SweepSpec spec, const std::string& format) {
    const SweepResult result = run_sweep(spec);
    for (const std::string& warning : result.warnings) std::cerr << "warning: " << warning << "\n";
    if (format == "csv") {
        std::cout << kSweepCsvHeader << "\n";
        for (const SweepRow& row : result.rows) std::cout << to_csv_line(row) << "\n";
    } else {
        for (const SweepRow& row : result.rows) {
            Json j;
            j["n"] = row.n;
            j["N"] = row.N;
            j["M"] = row.M;
            j["mode"] = to_string(row.mode);
            j["iterations"] = row.iterations;
            j["oracle_queries"] = row.oracle_queries;
            j["step_count"] = row.step_count;
            j["success_fraction"] = row.success_fraction;
            j["wall_time_ms"] = row.wall_time_ms;
            std::cout << j.dump() << "\n";
        }
    }
    return 0;
}

int cmd_selftest(double skew_theta, bool as_json) {
    const std::vector<CheckResult> checks = run_selftest(skew_theta);
    bool all_pass = true;
    if (as_json) {
        Json list = Json::array();
        for (const CheckResult& check : checks) {
            Json j;
            j["check"] = check.name;
            j["pass"] = check.pass;
            j["detail"] = check.detail;
            list.push_back(j);
            all_pass = all_pass && check.pass;
        }
        std::cout << list.dump(2) << "\n";
    } else {
        for (const CheckResult& check : checks) {
            std::cout << (check.pass ? "PASS" : "FAIL") << "  " << check.name << " ("
                      << check.detail << ")\n";
            all_pass = all_pass && check.pass;
        }
        std::cout << (all_pass ? "all checks passed" : "CHECKS FAILED") << "\n";
    }
    return all_pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"State-vector laboratory for standard, single-iteration, and "
                 "bounded-count Grover search"};
    app.require_subcommand(1);
    const int max_n = max_qubits_from_env();

    // run
    auto* run = app.add_subcommand("run", "Run one experiment and print its JSON report");
    InstanceFlags inst_flags;
    std::string run_mode = "standard";
    std::optional<std::uint64_t> run_shots;
    std::uint64_t run_seed = 1;
    std::string run_m_max;
    std::string run_order = "asc";
    std::string dump_state_path;
    run->add_option("--mode", run_mode, "standard|modified|bounded")->capture_default_str();
    run->add_option("--instance", inst_flags.instance,
                    "Instance as inline JSON {\"n\":..,\"solutions\":[..]} or a file path");
    run->add_option("--n", inst_flags.n, "Qubit count (with --solutions/--random-solutions)");
    run->add_option("--solutions", inst_flags.solutions, "Comma-separated solution indices");
    run->add_option("--random-solutions", inst_flags.random_solutions,
                    "Draw this many random solution indices");
    run->add_option("--shots", run_shots,
                    "Samples per run (default 1024; bounded mode: samples per trial, default 1)");
    run->add_option("--seed", run_seed, "RNG seed")->capture_default_str();
    run->add_option("--m-max", run_m_max, "Bounded mode: candidate bound (int, M, or kM)");
    run->add_option("--order", run_order, "Bounded mode candidate order: asc|desc")
        ->check(CLI::IsMember({"asc", "desc"}))
        ->capture_default_str();
    run->add_option("--dump-state", dump_state_path,
                    "Write the pre-measurement state as [re,im] pairs (small n only)");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep and print a table");
    std::string sweep_n = "4..10";
    std::string sweep_M = "1";
    std::string sweep_modes = "standard,modified,bounded";
    std::string sweep_m_max = "M";
    std::string sweep_format = "csv";
    std::string sweep_spec_path;
    SweepSpec spec;
    sweep->add_option("--n", sweep_n, "Qubit counts: comma list and/or a..b ranges")
        ->capture_default_str();
    sweep->add_option("--M", sweep_M, "Solution counts, comma list")->capture_default_str();
    sweep->add_option("--modes", sweep_modes, "Subset of standard,modified,bounded")
        ->capture_default_str();
    sweep->add_option("--shots", spec.shots, "Samples per standard/modified row")
        ->capture_default_str();
    sweep->add_option("--seed", spec.seed, "RNG seed")->capture_default_str();
    sweep->add_option("--m-max", sweep_m_max, "Bounded rows: candidate bound (int, M, or kM)")
        ->capture_default_str();
    sweep->add_option("--format", sweep_format, "csv|json (JSON lines)")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sweep->add_option("--spec", sweep_spec_path, "JSON sweep spec file; flags override fields");
    sweep->add_flag("--timings", spec.timings,
                    "Fill wall_time_ms with measured times (breaks byte-for-byte determinism)");

    // selftest
    auto* selftest = app.add_subcommand("selftest", "Run the cross-module invariant suite");
    double skew_theta = 0.0;
    bool selftest_json = false;
    selftest->add_option("--skew-theta", skew_theta,
                         "Fault-injection hook: offset added to every assumed angle");
    selftest->add_flag("--json", selftest_json, "Machine-readable check list");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);  // 0 for --help, nonzero usage errors
    }

    try {
        if (run->parsed())
            return cmd_run(inst_flags, run_mode, run_shots, run_seed, run_m_max, run_order,
                           dump_state_path, max_n);
        if (sweep->parsed()) {
            Json file = Json::object();
            if (!sweep_spec_path.empty()) {
                std::ifstream in(sweep_spec_path);
                if (!in) raise("bad-instance", "cannot open sweep spec '" + sweep_spec_path + "'");
                file = Json::parse(in, nullptr, false);
                if (file.is_discarded()) raise("bad-instance", "sweep spec is not valid JSON");
            }
            // explicit flags win over spec-file fields, which win over defaults
            if (!sweep->count("--n") && file.contains("n_range"))
                spec.n_range = file["n_range"].get<std::vector<int>>();
            else
                spec.n_range = parse_n_list(sweep_n);
            if (!sweep->count("--M") && file.contains("M_values"))
                spec.M_values = file["M_values"].get<std::vector<std::uint64_t>>();
            else
                spec.M_values = parse_index_list(sweep_M);
            if (!sweep->count("--modes") && file.contains("modes")) {
                for (const auto& name : file["modes"])
                    spec.modes.push_back(mode_from_string(name.get<std::string>()));
            } else {
                std::stringstream ss(sweep_modes);
                std::string token;
                while (std::getline(ss, token, ','))
                    if (!token.empty()) spec.modes.push_back(mode_from_string(token));
            }
            if (!sweep->count("--shots") && file.contains("shots"))
                spec.shots = file["shots"].get<std::uint64_t>();
            if (!sweep->count("--seed") && file.contains("seed"))
                spec.seed = file["seed"].get<std::uint64_t>();
            if (!sweep->count("--m-max") && file.contains("m_max_rule"))
                spec.m_max_rule = parse_m_max_rule(file["m_max_rule"].get<std::string>());
            else
                spec.m_max_rule = parse_m_max_rule(sweep_m_max);
            spec.max_n = max_n;
            return cmd_sweep(std::move(spec), sweep_format);
        }
        return cmd_selftest(skew_theta, selftest_json);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
