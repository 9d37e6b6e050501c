#pragma once

#include <cstdint>
#include <random>

namespace grover_lab {

// Every random choice in the library flows through this stream. The engine is
// MT19937-64, whose output sequence is pinned down bit-for-bit by the C++
// standard, so fixed seeds reproduce identical results on every platform.
// Bounded-integer and unit-interval draws are done by hand below because the
// std::*_distribution adapters are implementation-defined.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform double in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, bound); rejection sampling, no modulo bias.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

private:
    std::mt19937_64 engine_;
};

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}
}  // namespace detail

// Independent, reproducible child seed for stream `id` of a parent seed.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t id) {
    return detail::splitmix64(seed ^ detail::splitmix64(id));
}

}  // namespace grover_lab
