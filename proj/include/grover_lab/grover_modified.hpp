#pragma once

#include <cmath>
#include <cstdint>
#include <utility>

#include "grover_lab/grover_standard.hpp"
#include "grover_lab/instance.hpp"
#include "grover_lab/report.hpp"
#include "grover_lab/statevector.hpp"

namespace grover_lab {

struct Mat2 {
    // row-major: m[row][col]
    double m[2][2] = {{0.0, 0.0}, {0.0, 0.0}};

    static Mat2 identity() { return Mat2{{{1.0, 0.0}, {0.0, 1.0}}}; }
};

inline Mat2 operator*(const Mat2& lhs, const Mat2& rhs) {
    Mat2 out;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            out.m[r][c] = lhs.m[r][0] * rhs.m[0][c] + lhs.m[r][1] * rhs.m[1][c];
    return out;
}

// The three operators of the single-iteration scheme on the {non-solution,
// solution} basis, for an assumed solution count m:
//   O flips the solution branch phase,
//   A rotates by pi/2 - theta (taking the start state straight to the
//     solution branch),
//   X is the inversion-about-a-point correction with X*O = A.
struct OperatorSet {
    double theta_assumed = 0.0;
    Mat2 O;
    Mat2 X;
    Mat2 A;
};

inline OperatorSet operators_from_theta(double theta) {
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    OperatorSet ops;
    ops.theta_assumed = theta;
    ops.O = Mat2{{{1.0, 0.0}, {0.0, -1.0}}};
    ops.X = Mat2{{{s, c}, {c, -s}}};
    ops.A = Mat2{{{s, -c}, {c, s}}};
    return ops;
}

inline OperatorSet build_operators(std::uint64_t m, std::uint64_t N) {
    if (m < 1 || m > N)
        raise("bad-count", "assumed solution count " + std::to_string(m) +
                               " outside [1, " + std::to_string(N) + "]");
    return operators_from_theta(theta_for(m, N));
}

// Real unit vector (c0, c1) on the {non-solution, solution} basis.
struct ReducedState {
    double c0 = 0.0;
    double c1 = 0.0;
};

inline ReducedState apply_A_reduced(const OperatorSet& ops, const ReducedState& s) {
    return ReducedState{ops.A.m[0][0] * s.c0 + ops.A.m[0][1] * s.c1,
                        ops.A.m[1][0] * s.c0 + ops.A.m[1][1] * s.c1};
}

// Applies `op` on the span of the uniform non-solution/solution vectors and
// the identity on its orthogonal complement, via overlap-project-recombine;
// O(N), no full-space matrix is formed. When M = N the subspace degenerates to
// a single direction and the only norm-preserving extension consistent with
// the untouched-residual rule is the identity, which is what the in-scope
// operators reduce to there anyway.
inline StateVector lift_apply(StateVector state, const SearchInstance& inst, const Mat2& op) {
    if (state.n != inst.n)
        raise("shape-error", "state and instance have different qubit counts");
    const std::uint64_t N = inst.N;
    const std::uint64_t M = inst.M();
    if (M == N) return state;

    const SubspaceCoords c = decompose(state, inst);
    const Complex a_new = op.m[0][0] * c.a + op.m[0][1] * c.b;
    const Complex b_new = op.m[1][0] * c.a + op.m[1][1] * c.b;
    const Complex delta_non = (a_new - c.a) / std::sqrt(static_cast<double>(N - M));
    const Complex delta_sol = (b_new - c.b) / std::sqrt(static_cast<double>(M));
    for (std::uint64_t i = 0; i < N; ++i)
        state.amplitudes[i] += inst.membership[i] ? delta_sol : delta_non;
    return state;
}

inline StateVector lift_apply_A(StateVector state, const SearchInstance& inst,
                                const OperatorSet& ops) {
    return lift_apply(std::move(state), inst, ops.A);
}

// Success probability of a single rotation built for theta_assumed acting on a
// uniform start whose true angle is theta_true: the final solution-branch
// amplitude is cos(theta_true - theta_assumed).
inline double mismatch_probability(double theta_true, double theta_assumed) {
    const double c = std::cos(theta_true - theta_assumed);
    return c * c;
}

// Single-iteration search with the exact solution count: uniform preparation,
// one application of A (one oracle query, its O factor), then sampling.
inline RunReport run_modified_known_m(const SearchInstance& inst, std::uint64_t shots,
                                      std::uint64_t seed) {
    const OperatorSet ops = build_operators(inst.M(), inst.N);
    StateVector state = lift_apply_A(uniform_state(inst.n), inst, ops);
    const std::vector<std::uint64_t> samples = measure(state, shots, seed);

    RunReport report;
    report.mode = "modified";
    report.n = inst.n;
    report.M = inst.M();
    report.iterations = 1;
    report.oracle_queries = 1;
    report.step_count = static_cast<std::uint64_t>(inst.n) + 1;
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
