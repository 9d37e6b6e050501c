#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "grover_lab/errors.hpp"
#include "grover_lab/instance.hpp"
#include "grover_lab/rng.hpp"

namespace grover_lab {

using Complex = std::complex<double>;

// Dense register of 2^n complex amplitudes. Operations below take the state by
// value and return the transformed state; pass with std::move to avoid copies.
struct StateVector {
    int n = 0;
    std::vector<Complex> amplitudes;

    std::uint64_t size() const { return amplitudes.size(); }
};

// Overlaps with the uniform non-solution vector (a) and uniform solution
// vector (b), plus the norm of what lies outside their span. For M = N the
// non-solution vector is empty and a is 0 by convention.
struct SubspaceCoords {
    Complex a{0.0, 0.0};
    Complex b{0.0, 0.0};
    double residual_norm = 0.0;
};

inline StateVector basis_state(int n, std::uint64_t index, int max_n = kDefaultMaxQubits) {
    if (n < 1 || n > max_n)
        raise("bad-dimension", "qubit count " + std::to_string(n) + " outside [1, " +
                                   std::to_string(max_n) + "]");
    const std::uint64_t N = std::uint64_t{1} << n;
    if (index >= N)
        raise("bad-index", "basis index " + std::to_string(index) + " not below N = " +
                               std::to_string(N));
    StateVector s;
    s.n = n;
    s.amplitudes.assign(N, Complex{0.0, 0.0});
    s.amplitudes[index] = Complex{1.0, 0.0};
    return s;
}

inline StateVector uniform_state(int n, int max_n = kDefaultMaxQubits) {
    if (n < 1 || n > max_n)
        raise("bad-dimension", "qubit count " + std::to_string(n) + " outside [1, " +
                                   std::to_string(max_n) + "]");
    const std::uint64_t N = std::uint64_t{1} << n;
    StateVector s;
    s.n = n;
    s.amplitudes.assign(N, Complex{1.0 / std::sqrt(static_cast<double>(N)), 0.0});
    return s;
}

// In-place fast Walsh-Hadamard transform, each butterfly scaled by 1/sqrt(2).
// Self-inverse. N log N real operations, no matrix is formed.
inline void hadamard_all_inplace(StateVector& state) {
    const std::uint64_t N = state.size();
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (std::uint64_t half = 1; half < N; half <<= 1) {
        const std::uint64_t stride = half << 1;
        for (std::uint64_t base = 0; base < N; base += stride) {
            for (std::uint64_t i = base; i < base + half; ++i) {
                const Complex x = state.amplitudes[i];
                const Complex y = state.amplitudes[i + half];
                state.amplitudes[i] = (x + y) * inv_sqrt2;
                state.amplitudes[i + half] = (x - y) * inv_sqrt2;
            }
        }
    }
}

inline StateVector hadamard_all(StateVector state) {
    hadamard_all_inplace(state);
    return state;
}

inline double norm(const StateVector& state) {
    double acc = 0.0;
    for (const Complex& amp : state.amplitudes) acc += std::norm(amp);
    return std::sqrt(acc);
}

inline Complex inner_product(const StateVector& lhs, const StateVector& rhs) {
    if (lhs.n != rhs.n)
        raise("shape-error", "states have different qubit counts");
    Complex acc{0.0, 0.0};
    for (std::uint64_t i = 0; i < lhs.size(); ++i)
        acc += std::conj(lhs.amplitudes[i]) * rhs.amplitudes[i];
    return acc;
}

// `shots` i.i.d. samples from p(i) = |amplitude_i|^2, via inverse-CDF over the
// cumulative probability array. Deterministic for a fixed seed.
inline std::vector<std::uint64_t> measure(const StateVector& state, std::uint64_t shots,
                                          std::uint64_t seed) {
    if (shots < 1)
        raise("bad-count", "shot count must be at least 1");
    const std::uint64_t N = state.size();
    std::vector<double> cdf(N);
    double acc = 0.0;
    for (std::uint64_t i = 0; i < N; ++i) {
        acc += std::norm(state.amplitudes[i]);
        cdf[i] = acc;
    }
    if (!(acc > 0.0))
        raise("invalid-state", "cannot sample from a zero-norm state");

    RandomStream rng(seed);
    std::vector<std::uint64_t> samples(shots);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = rng.next_unit() * acc;
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        samples[s] = std::min<std::uint64_t>(static_cast<std::uint64_t>(it - cdf.begin()), N - 1);
    }
    return samples;
}

inline double solution_probability(const StateVector& state, const SearchInstance& inst) {
    if (state.n != inst.n)
        raise("shape-error", "state and instance have different qubit counts");
    double acc = 0.0;
    for (std::uint64_t x : inst.solutions) acc += std::norm(state.amplitudes[x]);
    return acc;
}

inline SubspaceCoords decompose(const StateVector& state, const SearchInstance& inst) {
    if (state.n != inst.n)
        raise("shape-error", "state and instance have different qubit counts");
    const std::uint64_t N = inst.N;
    const std::uint64_t M = inst.M();

    Complex sum_sol{0.0, 0.0};
    Complex sum_non{0.0, 0.0};
    for (std::uint64_t i = 0; i < N; ++i) {
        if (inst.membership[i])
            sum_sol += state.amplitudes[i];
        else
            sum_non += state.amplitudes[i];
    }

    SubspaceCoords c;
    const double inv_sqrt_m = 1.0 / std::sqrt(static_cast<double>(M));
    c.b = sum_sol * inv_sqrt_m;
    const double inv_sqrt_non =
        (M < N) ? 1.0 / std::sqrt(static_cast<double>(N - M)) : 0.0;
    c.a = sum_non * inv_sqrt_non;

    double res = 0.0;
    const Complex mean_sol = c.b * inv_sqrt_m;
    const Complex mean_non = c.a * inv_sqrt_non;
    for (std::uint64_t i = 0; i < N; ++i) {
        const Complex proj = inst.membership[i] ? mean_sol : mean_non;
        res += std::norm(state.amplitudes[i] - proj);
    }
    c.residual_norm = std::sqrt(res);
    return c;
}

}  // namespace grover_lab
