#pragma once

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "grover_lab/bounded_search.hpp"
#include "grover_lab/grover_modified.hpp"
#include "grover_lab/grover_standard.hpp"
#include "grover_lab/instance.hpp"
#include "grover_lab/report.hpp"
#include "grover_lab/rng.hpp"
#include "grover_lab/statevector.hpp"

namespace grover_lab {

enum class Mode { standard, modified, bounded };

inline const char* to_string(Mode mode) {
    switch (mode) {
        case Mode::standard: return "standard";
        case Mode::modified: return "modified";
        default: return "bounded";
    }
}

inline Mode mode_from_string(const std::string& s) {
    if (s == "standard") return Mode::standard;
    if (s == "modified") return Mode::modified;
    if (s == "bounded") return Mode::bounded;
    raise("bad-mode", "unknown mode '" + s + "' (expected standard|modified|bounded)");
}

// Rule deciding the bounded-search m_max per sweep row: a fixed integer ("4"),
// the true count ("M"), or a multiple of it ("2M" / "2*M"). The result is
// clamped to [1, N].
struct MMaxRule {
    std::uint64_t factor = 1;
    bool times_m = true;

    std::uint64_t eval(std::uint64_t M, std::uint64_t N) const {
        const std::uint64_t raw = times_m ? factor * M : factor;
        return std::min(std::max<std::uint64_t>(raw, 1), N);
    }
};

inline MMaxRule parse_m_max_rule(const std::string& text) {
    MMaxRule rule;
    std::size_t pos = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    const std::string suffix = text.substr(pos);
    if (pos > 0) {
        rule.factor = std::stoull(text.substr(0, pos));
        if (suffix.empty())
            rule.times_m = false;  // fixed value
        else if (suffix == "M" || suffix == "*M" || suffix == "xM")
            rule.times_m = true;
        else
            raise("bad-count", "cannot parse m_max rule '" + text + "'");
    } else if (suffix == "M") {
        rule.factor = 1;
        rule.times_m = true;
    } else {
        raise("bad-count", "cannot parse m_max rule '" + text + "'");
    }
    return rule;
}

struct SweepSpec {
    std::vector<int> n_range;
    std::vector<std::uint64_t> M_values;
    std::vector<Mode> modes;
    std::uint64_t shots = 1024;
    std::uint64_t seed = 1;
    MMaxRule m_max_rule;          // bounded mode only
    bool timings = false;         // real wall_time_ms breaks byte determinism
    int max_n = kDefaultMaxQubits;
};

struct SweepRow {
    int n = 0;
    std::uint64_t N = 0;
    std::uint64_t M = 0;
    Mode mode = Mode::standard;
    std::uint64_t iterations = 0;
    std::uint64_t oracle_queries = 0;
    std::uint64_t step_count = 0;
    double success_fraction = 0.0;
    double wall_time_ms = 0.0;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    std::vector<std::string> warnings;  // skipped infeasible (n, M) pairs
};

// One experiment per (n, M, mode), in spec order, each on a fresh random
// instance drawn from a per-row substream so rows are independently
// reproducible.
inline SweepResult run_sweep(const SweepSpec& spec) {
    if (spec.modes.empty()) raise("bad-mode", "sweep needs at least one mode");
    SweepResult result;
    for (int n : spec.n_range) {
        for (std::uint64_t M : spec.M_values) {
            if (n < 1 || n > spec.max_n) {
                result.warnings.push_back("skip n=" + std::to_string(n) +
                                          ": dimension outside [1, " +
                                          std::to_string(spec.max_n) + "]");
                continue;
            }
            if (M < 1 || M > (std::uint64_t{1} << n)) {
                result.warnings.push_back("skip n=" + std::to_string(n) +
                                          " M=" + std::to_string(M) +
                                          ": infeasible pair");
                continue;
            }
            for (Mode mode : spec.modes) {
                const std::uint64_t row_seed = substream_seed(
                    substream_seed(substream_seed(spec.seed, static_cast<std::uint64_t>(n)), M),
                    static_cast<std::uint64_t>(mode));
                const SearchInstance inst =
                    random_instance(n, M, substream_seed(row_seed, 1), spec.max_n);
                const std::uint64_t run_seed = substream_seed(row_seed, 2);

                SweepRow row;
                row.n = n;
                row.N = inst.N;
                row.M = M;
                row.mode = mode;
                const auto start = std::chrono::steady_clock::now();
                switch (mode) {
                    case Mode::standard: {
                        const RunReport r = run_standard(inst, spec.shots, run_seed);
                        row.iterations = r.iterations;
                        row.oracle_queries = r.oracle_queries;
                        row.step_count = r.step_count;
                        row.success_fraction = r.success_fraction;
                        break;
                    }
                    case Mode::modified: {
                        const RunReport r = run_modified_known_m(inst, spec.shots, run_seed);
                        row.iterations = r.iterations;
                        row.oracle_queries = r.oracle_queries;
                        row.step_count = r.step_count;
                        row.success_fraction = r.success_fraction;
                        break;
                    }
                    case Mode::bounded: {
                        BoundedConfig cfg;
                        cfg.m_max = spec.m_max_rule.eval(M, inst.N);
                        cfg.shots_per_trial = 1;
                        cfg.candidate_order = CandidateOrder::ascending;
                        cfg.seed = run_seed;
                        const BoundedReport r = run_bounded(inst, cfg);
                        row.iterations = r.trials_used;
                        row.oracle_queries = r.total_oracle_queries();
                        row.step_count = r.step_count;
                        row.success_fraction = r.found ? 1.0 : 0.0;
                        break;
                    }
                }
                if (spec.timings) {
                    const auto stop = std::chrono::steady_clock::now();
                    row.wall_time_ms =
                        std::chrono::duration<double, std::milli>(stop - start).count();
                }
                result.rows.push_back(row);
            }
        }
    }
    return result;
}

inline constexpr const char* kSweepCsvHeader =
    "n,N,M,mode,iterations,oracle_queries,step_count,success_fraction,wall_time_ms";

// Shortest decimal string that round-trips to the same double.
inline std::string format_double(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    (void)ec;
    return std::string(buf, ptr);
}

inline std::string format_fraction(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    return buf;
}

inline std::string to_csv_line(const SweepRow& row) {
    std::string line;
    line += std::to_string(row.n);
    line += ',';
    line += std::to_string(row.N);
    line += ',';
    line += std::to_string(row.M);
    line += ',';
    line += to_string(row.mode);
    line += ',';
    line += std::to_string(row.iterations);
    line += ',';
    line += std::to_string(row.oracle_queries);
    line += ',';
    line += std::to_string(row.step_count);
    line += ',';
    line += format_fraction(row.success_fraction);
    line += ',';
    line += format_double(row.wall_time_ms);
    return line;
}

// --- cross-module invariant checks backing the selftest subcommand ---

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

namespace detail {

inline double max_abs(const Mat2& m) {
    double best = 0.0;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) best = std::max(best, std::abs(m.m[r][c]));
    return best;
}

inline Mat2 gram_minus_identity(const Mat2& u) {
    Mat2 g;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            g.m[r][c] = u.m[0][r] * u.m[0][c] + u.m[1][r] * u.m[1][c] - (r == c ? 1.0 : 0.0);
    return g;
}

inline Mat2 difference(const Mat2& lhs, const Mat2& rhs) {
    Mat2 d;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) d.m[r][c] = lhs.m[r][c] - rhs.m[r][c];
    return d;
}

inline std::string error_detail(std::size_t cases, double max_err) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%zu cases, max err %.2e", cases, max_err);
    return buf;
}

}  // namespace detail

// Invariant suite at n <= 10. `theta_skew` is a fault-injection hook: it is
// added to every assumed angle, so a nonzero value must trip the single-shot
// exactness check while leaving the algebraic identities intact.
inline std::vector<CheckResult> run_selftest(double theta_skew = 0.0) {
    std::vector<CheckResult> results;
    const auto skewed_operators = [theta_skew](std::uint64_t m, std::uint64_t N) {
        return operators_from_theta(theta_for(m, N) + theta_skew);
    };

    {
        RandomStream rng(0x5e1f7e57);
        double max_err = 0.0;
        const std::size_t cases = 200;
        for (std::size_t i = 0; i < cases; ++i) {
            const int n = 1 + static_cast<int>(rng.next_below(20));
            const std::uint64_t N = std::uint64_t{1} << n;
            const std::uint64_t m = 1 + rng.next_below(N);
            const OperatorSet ops = skewed_operators(m, N);
            max_err = std::max(max_err, detail::max_abs(detail::difference(ops.X * ops.O, ops.A)));
            for (const Mat2* u : {&ops.O, &ops.X, &ops.A})
                max_err = std::max(max_err, detail::max_abs(detail::gram_minus_identity(*u)));
        }
        results.push_back({"operator-unitarity", max_err <= 1e-14,
                           detail::error_detail(cases, max_err)});
    }

    {
        RandomStream rng(0x2d5ca1e);
        double max_err = 0.0;
        const std::size_t cases = 50;
        for (std::size_t i = 0; i < cases; ++i) {
            const int n = 2 + static_cast<int>(rng.next_below(9));
            const std::uint64_t N = std::uint64_t{1} << n;
            const std::uint64_t M = 1 + rng.next_below(N - 1);  // keep the subspace 2-D
            const SearchInstance inst = random_instance(n, M, rng.next_u64());
            const std::uint64_t m = 1 + rng.next_below(N);
            const OperatorSet ops = skewed_operators(m, N);

            const AngleParams angle = angle_of(inst);
            const ReducedState reduced =
                apply_A_reduced(ops, ReducedState{angle.cos_theta, angle.sin_theta});
            const SubspaceCoords full =
                decompose(lift_apply_A(uniform_state(n), inst, ops), inst);
            max_err = std::max(max_err, std::abs(full.a - Complex{reduced.c0, 0.0}));
            max_err = std::max(max_err, std::abs(full.b - Complex{reduced.c1, 0.0}));
        }
        results.push_back({"reduced-full-equivalence", max_err <= 1e-10,
                           detail::error_detail(cases, max_err)});
    }

    {
        RandomStream rng(0xa11c0de);
        double max_err = 0.0;
        const std::size_t cases = 50;
        for (std::size_t i = 0; i < cases; ++i) {
            const int n = 1 + static_cast<int>(rng.next_below(10));
            const std::uint64_t N = std::uint64_t{1} << n;
            const std::uint64_t M = 1 + rng.next_below(N);
            const SearchInstance inst = random_instance(n, M, rng.next_u64());
            const OperatorSet ops = skewed_operators(M, N);
            const StateVector state = lift_apply_A(uniform_state(n), inst, ops);
            max_err = std::max(max_err, std::abs(solution_probability(state, inst) - 1.0));
        }
        results.push_back({"single-shot-exactness", max_err <= 1e-10,
                           detail::error_detail(cases, max_err)});
    }

    {
        RandomStream rng(0x17e7a7e);
        double max_err = 0.0;
        const std::size_t cases = 20;
        for (std::size_t i = 0; i < cases; ++i) {
            const int n = 2 + static_cast<int>(rng.next_below(9));
            const std::uint64_t N = std::uint64_t{1} << n;
            const std::uint64_t M = 1 + rng.next_below(N);
            const SearchInstance inst = random_instance(n, M, rng.next_u64());
            const IterationPlan plan = plan_iterations(inst);
            StateVector state = uniform_state(n);
            for (std::uint64_t it = 0; it <= 2 * plan.I; ++it) {
                if (it > 0) state = grover_iteration(std::move(state), inst);
                const double predicted =
                    std::pow(std::sin(static_cast<double>(2 * it + 1) * plan.theta), 2);
                max_err = std::max(max_err,
                                   std::abs(solution_probability(state, inst) - predicted));
            }
        }
        results.push_back({"iteration-prediction", max_err <= 1e-9,
                           detail::error_detail(cases, max_err)});
    }

    return results;
}

}  // namespace grover_lab
