#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace grover_lab {

// Cost model shared by every algorithm: preparing the uniform superposition
// costs n steps, each application of an operator acting on the two-dimensional
// invariant subspace costs 1 step, each phase-oracle factor inside such an
// operator costs 1 oracle query, and each classical f(x) check costs 1
// classical query (reported separately).
struct RunReport {
    std::string mode;               // "standard" or "modified"
    int n = 0;
    std::uint64_t M = 0;
    std::uint64_t iterations = 0;   // operator applications after preparation
    std::uint64_t oracle_queries = 0;
    std::uint64_t step_count = 0;
    std::uint64_t measured = 0;     // first sample of the run
    bool verified = false;          // f(measured) == 1
    double success_fraction = 0.0;  // fraction of samples that verify
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    std::map<std::uint64_t, std::uint64_t> histogram;  // retained, not serialized
};

struct TrialRecord {
    std::uint64_t m = 0;        // assumed solution count for the trial
    std::uint64_t measured = 0; // sample at which the trial stopped
    bool verified = false;
};

struct BoundedReport {
    std::optional<std::uint64_t> found;
    std::uint64_t trials_used = 0;
    std::uint64_t quantum_queries = 0;    // oracle factors inside applied operators
    std::uint64_t classical_queries = 0;  // f(x) verifications
    std::uint64_t step_count = 0;
    std::vector<TrialRecord> per_trial;

    std::uint64_t total_oracle_queries() const { return quantum_queries + classical_queries; }
};

}  // namespace grover_lab
