#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "grover_lab/grover_modified.hpp"
#include "grover_lab/instance.hpp"
#include "grover_lab/report.hpp"
#include "grover_lab/rng.hpp"
#include "grover_lab/statevector.hpp"

namespace grover_lab {

enum class CandidateOrder { ascending, descending };

inline const char* to_string(CandidateOrder order) {
    return order == CandidateOrder::ascending ? "asc" : "desc";
}

// Search loop for the case where only an upper bound on the solution count is
// known: try candidate counts m in order, run the single-iteration algorithm
// assuming m, and classically verify every sample it produces.
struct BoundedConfig {
    std::uint64_t m_max = 1;
    std::uint64_t shots_per_trial = 1;
    CandidateOrder candidate_order = CandidateOrder::ascending;
    std::uint64_t seed = 0;
};

inline void validate(const BoundedConfig& cfg, const SearchInstance& inst) {
    if (cfg.m_max < 1 || cfg.m_max > inst.N)
        raise("bad-count", "m_max " + std::to_string(cfg.m_max) + " outside [1, " +
                               std::to_string(inst.N) + "]");
    if (cfg.shots_per_trial < 1)
        raise("bad-count", "shots_per_trial must be at least 1");
}

// Returns on the first classically verified sample; a verified hit is accepted
// no matter which candidate produced it. Guaranteed to find a solution when
// m_max >= M, because the m = M trial leaves probability 1 on the solutions.
// If no sample verifies across all candidates, found stays empty ("exhausted").
inline BoundedReport run_bounded(const SearchInstance& inst, const BoundedConfig& cfg) {
    validate(cfg, inst);

    BoundedReport report;
    for (std::uint64_t t = 0; t < cfg.m_max; ++t) {
        const std::uint64_t m = cfg.candidate_order == CandidateOrder::ascending
                                    ? t + 1
                                    : cfg.m_max - t;
        const OperatorSet ops = build_operators(m, inst.N);
        StateVector state = lift_apply_A(uniform_state(inst.n), inst, ops);
        report.quantum_queries += 1;  // the O factor inside A
        report.step_count += static_cast<std::uint64_t>(inst.n) + 1;
        ++report.trials_used;

        const std::uint64_t trial_seed = substream_seed(cfg.seed, m);
        const std::vector<std::uint64_t> samples =
            measure(state, cfg.shots_per_trial, trial_seed);

        TrialRecord record;
        record.m = m;
        for (std::uint64_t sample : samples) {
            report.classical_queries += 1;
            record.measured = sample;
            record.verified = f_eval(inst, sample) == 1;
            if (record.verified) break;
        }
        report.per_trial.push_back(record);
        if (record.verified) {
            report.found = record.measured;
            break;
        }
    }
    return report;
}

// Closed-form expectation of quantum + classical queries under the per-trial
// verification probability p_m = cos^2(theta_true - theta_m), with i.i.d.
// samples inside a trial. When M = N every sample verifies regardless of m, so
// p_m = 1 there.
inline double expected_queries(const SearchInstance& inst, const BoundedConfig& cfg) {
    validate(cfg, inst);
    const double theta_true = angle_of(inst).theta;
    const double s = static_cast<double>(cfg.shots_per_trial);

    double expectation = 0.0;
    double reach_probability = 1.0;  // probability all earlier trials failed
    for (std::uint64_t t = 0; t < cfg.m_max; ++t) {
        const std::uint64_t m = cfg.candidate_order == CandidateOrder::ascending
                                    ? t + 1
                                    : cfg.m_max - t;
        const double p = inst.M() == inst.N
                             ? 1.0
                             : mismatch_probability(theta_true, theta_for(m, inst.N));
        const double q = 1.0 - p;
        const double q_s = std::pow(q, s);
        // 1 quantum query, then the expected number of classical checks before
        // the trial either verifies or runs out of samples.
        const double expected_checks = p > 0.0 ? (1.0 - q_s) / p : s;
        expectation += reach_probability * (1.0 + expected_checks);
        reach_probability *= q_s;
    }
    return expectation;
}

}  // namespace grover_lab
