#pragma once

#include <cmath>
#include <cstdint>
#include <utility>

#include "grover_lab/instance.hpp"
#include "grover_lab/report.hpp"
#include "grover_lab/statevector.hpp"

namespace grover_lab {

// Iteration count solving theta + I*(2*theta) = pi/2, rounded half away from
// zero to the nearest non-negative integer, plus the success probability the
// rounded count actually achieves.
struct IterationPlan {
    std::uint64_t I = 0;
    double theta = 0.0;
    double predicted_success = 0.0;
};

// Phase oracle: negate the amplitude of every solution index.
inline StateVector oracle_flip(StateVector state, const SearchInstance& inst) {
    if (state.n != inst.n)
        raise("shape-error", "state and instance have different qubit counts");
    for (std::uint64_t x : inst.solutions) state.amplitudes[x] = -state.amplitudes[x];
    return state;
}

// Phase shift of -1 on every basis state except |0>.
inline StateVector conditional_phase(StateVector state) {
    for (std::uint64_t i = 1; i < state.size(); ++i)
        state.amplitudes[i] = -state.amplitudes[i];
    return state;
}

// Inversion about the mean: amplitude_i -> 2*mean - amplitude_i.
inline StateVector diffusion(StateVector state) {
    Complex sum{0.0, 0.0};
    for (const Complex& amp : state.amplitudes) sum += amp;
    const Complex twice_mean = 2.0 * sum / static_cast<double>(state.size());
    for (Complex& amp : state.amplitudes) amp = twice_mean - amp;
    return state;
}

// Equivalent realization of the diffusion as H^n, conditional phase, H^n.
inline StateVector diffusion_sandwich(StateVector state) {
    hadamard_all_inplace(state);
    state = conditional_phase(std::move(state));
    hadamard_all_inplace(state);
    return state;
}

// One Grover iteration: oracle flip then inversion about the mean. Rotates the
// in-subspace component by 2*theta toward the solution branch.
inline StateVector grover_iteration(StateVector state, const SearchInstance& inst) {
    return diffusion(oracle_flip(std::move(state), inst));
}

inline IterationPlan plan_iterations(const SearchInstance& inst) {
    IterationPlan plan;
    plan.theta = angle_of(inst).theta;
    if (inst.M() == inst.N) {
        plan.I = 0;
    } else {
        const double raw = (M_PI / 2.0 - plan.theta) / (2.0 * plan.theta);
        const double rounded = std::round(raw);  // half away from zero
        plan.I = rounded <= 0.0 ? 0 : static_cast<std::uint64_t>(rounded);
    }
    plan.predicted_success =
        std::pow(std::sin(static_cast<double>(2 * plan.I + 1) * plan.theta), 2);
    return plan;
}

// Full pipeline: uniform preparation, I Grover iterations, multi-shot sampling.
inline RunReport run_standard(const SearchInstance& inst, std::uint64_t shots,
                              std::uint64_t seed) {
    const IterationPlan plan = plan_iterations(inst);
    StateVector state = uniform_state(inst.n);
    for (std::uint64_t i = 0; i < plan.I; ++i)
        state = grover_iteration(std::move(state), inst);

    const std::vector<std::uint64_t> samples = measure(state, shots, seed);

    RunReport report;
    report.mode = "standard";
    report.n = inst.n;
    report.M = inst.M();
    report.iterations = plan.I;
    report.oracle_queries = plan.I;
    report.step_count = static_cast<std::uint64_t>(inst.n) + plan.I;
    report.measured = samples.front();
    report.verified = f_eval(inst, report.measured) == 1;
    report.shots = shots;
    report.seed = seed;
    std::uint64_t hits = 0;
    for (std::uint64_t s : samples) {
        ++report.histogram[s];
        if (inst.is_solution(s)) ++hits;
    }
    report.success_fraction = static_cast<double>(hits) / static_cast<double>(shots);
    return report;
}

}  // namespace grover_lab
