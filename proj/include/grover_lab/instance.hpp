#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "grover_lab/errors.hpp"
#include "grover_lab/rng.hpp"

namespace grover_lab {

// Hard memory guard: 2^24 amplitudes (~256 MB as complex<double>). Overridable
// per call; the CLI maps GROVER_LAB_MAX_N onto it.
inline constexpr int kDefaultMaxQubits = 24;

// A search problem over N = 2^n indices with a fixed, non-empty solution set.
// Immutable after construction; safe to share across threads.
struct SearchInstance {
    int n = 0;                            // qubit count
    std::uint64_t N = 0;                  // 2^n
    std::vector<std::uint64_t> solutions; // sorted, deduplicated
    std::vector<bool> membership;         // size N, O(1) solution test

    std::uint64_t M() const { return solutions.size(); }
    bool is_solution(std::uint64_t x) const { return membership[x]; }
};

// theta = arcsin(sqrt(M/N)): the angle the uniform state makes with the
// non-solution branch of the two-dimensional invariant subspace.
struct AngleParams {
    double theta = 0.0;
    double cos_theta = 0.0;
    double sin_theta = 0.0;
};

inline SearchInstance make_instance(int n, std::vector<std::uint64_t> solutions,
                                    int max_n = kDefaultMaxQubits) {
    if (n < 1 || n > max_n)
        raise("bad-dimension", "qubit count " + std::to_string(n) + " outside [1, " +
                                   std::to_string(max_n) + "]");
    const std::uint64_t N = std::uint64_t{1} << n;
    if (solutions.empty())
        raise("no-solutions", "solution set must be non-empty");
    std::sort(solutions.begin(), solutions.end());
    solutions.erase(std::unique(solutions.begin(), solutions.end()), solutions.end());
    if (solutions.back() >= N)
        raise("bad-index", "solution index " + std::to_string(solutions.back()) +
                               " not below N = " + std::to_string(N));

    SearchInstance inst;
    inst.n = n;
    inst.N = N;
    inst.membership.assign(N, false);
    for (std::uint64_t x : solutions) inst.membership[x] = true;
    inst.solutions = std::move(solutions);
    return inst;
}

// Classical membership oracle f: 1 iff x solves the instance.
inline int f_eval(const SearchInstance& inst, std::uint64_t x) {
    if (x >= inst.N)
        raise("bad-index", "query index " + std::to_string(x) + " not below N = " +
                               std::to_string(inst.N));
    return inst.membership[x] ? 1 : 0;
}

inline AngleParams angle_of(const SearchInstance& inst) {
    AngleParams a;
    a.sin_theta = std::sqrt(static_cast<double>(inst.M()) / static_cast<double>(inst.N));
    a.cos_theta = std::sqrt(static_cast<double>(inst.N - inst.M()) / static_cast<double>(inst.N));
    a.theta = std::asin(a.sin_theta);
    return a;
}

inline double theta_for(std::uint64_t m, std::uint64_t N) {
    return std::asin(std::sqrt(static_cast<double>(m) / static_cast<double>(N)));
}

// M distinct indices drawn uniformly (Floyd's sampling); deterministic per seed.
inline SearchInstance random_instance(int n, std::uint64_t M, std::uint64_t seed,
                                      int max_n = kDefaultMaxQubits) {
    if (n < 1 || n > max_n)
        raise("bad-dimension", "qubit count " + std::to_string(n) + " outside [1, " +
                                   std::to_string(max_n) + "]");
    const std::uint64_t N = std::uint64_t{1} << n;
    if (M < 1 || M > N)
        raise("bad-count", "solution count " + std::to_string(M) + " outside [1, " +
                               std::to_string(N) + "]");

    std::vector<std::uint64_t> chosen;
    chosen.reserve(M);
    std::vector<bool> taken(N, false);
    RandomStream rng(seed);
    for (std::uint64_t j = N - M; j < N; ++j) {
        const std::uint64_t t = rng.next_below(j + 1);
        if (taken[t]) {
            chosen.push_back(j);
            taken[j] = true;
        } else {
            chosen.push_back(t);
            taken[t] = true;
        }
    }
    return make_instance(n, std::move(chosen), max_n);
}

}  // namespace grover_lab
