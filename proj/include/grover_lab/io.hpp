#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "grover_lab/bounded_search.hpp"
#include "grover_lab/errors.hpp"
#include "grover_lab/grover_modified.hpp"
#include "grover_lab/instance.hpp"
#include "grover_lab/report.hpp"
#include "grover_lab/statevector.hpp"

namespace grover_lab {

// Field order in emitted objects follows the documented formats.
using Json = nlohmann::ordered_json;

// Instance literal: {"n": int, "solutions": [int, ...]}, solutions ascending.
inline Json instance_to_json(const SearchInstance& inst) {
    Json j;
    j["n"] = inst.n;
    j["solutions"] = inst.solutions;
    return j;
}

inline SearchInstance instance_from_json(const Json& j, int max_n = kDefaultMaxQubits) {
    if (!j.is_object() || !j.contains("n") || !j.contains("solutions") ||
        !j["n"].is_number_integer() || !j["solutions"].is_array())
        raise("bad-instance", "expected {\"n\": int, \"solutions\": [int, ...]}");
    std::vector<std::uint64_t> solutions;
    for (const auto& entry : j["solutions"]) {
        if (!entry.is_number_integer() || entry.get<std::int64_t>() < 0)
            raise("bad-index", "solution indices must be non-negative integers");
        solutions.push_back(entry.get<std::uint64_t>());
    }
    return make_instance(j["n"].get<int>(), std::move(solutions), max_n);
}

// Debug dump: index-ordered array of [re, im] pairs. Not intended for large n.
inline Json state_to_json(const StateVector& state) {
    Json j = Json::array();
    for (const Complex& amp : state.amplitudes)
        j.push_back(Json::array({amp.real(), amp.imag()}));
    return j;
}

inline Json mat2_to_json(const Mat2& m) {
    return Json::array({Json::array({m.m[0][0], m.m[0][1]}),
                        Json::array({m.m[1][0], m.m[1][1]})});
}

inline Json operators_to_json(const OperatorSet& ops) {
    Json j;
    j["theta"] = ops.theta_assumed;
    j["O"] = mat2_to_json(ops.O);
    j["X"] = mat2_to_json(ops.X);
    j["A"] = mat2_to_json(ops.A);
    return j;
}

inline Json report_to_json(const RunReport& report) {
    Json j;
    j["mode"] = report.mode;
    j["n"] = report.n;
    j["M"] = report.M;
    j["iterations"] = report.iterations;
    j["oracle_queries"] = report.oracle_queries;
    j["step_count"] = report.step_count;
    j["measured"] = report.measured;
    j["verified"] = report.verified;
    j["success_fraction"] = report.success_fraction;
    j["shots"] = report.shots;
    j["seed"] = report.seed;
    return j;
}

inline Json report_to_json(const BoundedReport& report) {
    Json j;
    if (report.found)
        j["found"] = *report.found;
    else
        j["found"] = nullptr;
    j["trials_used"] = report.trials_used;
    j["quantum_queries"] = report.quantum_queries;
    j["classical_queries"] = report.classical_queries;
    j["per_trial"] = Json::array();
    for (const TrialRecord& t : report.per_trial) {
        Json row;
        row["m"] = t.m;
        row["measured"] = t.measured;
        row["verified"] = t.verified;
        j["per_trial"].push_back(row);
    }
    return j;
}

}  // namespace grover_lab
