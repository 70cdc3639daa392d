#pragma once

#include <cstdint>

namespace maxplus {

/// Counter-based generator: every draw is a pure function of
/// (seed, stream, counter), so runs are reproducible regardless of the
/// order in which draws are made. Mixing uses the SplitMix64 finalizer.
class CounterRng {
public:
    explicit constexpr CounterRng(std::uint64_t seed) noexcept : seed_(seed) {}

    constexpr std::uint64_t bits(std::uint64_t stream, std::uint64_t counter) const noexcept {
        return mix(seed_ ^ mix(stream * 0x9E3779B97F4A7C15ULL + mix(counter + 0x632BE59BD9B4E019ULL)));
    }

    /// Uniform integer in [lo, hi] (rejection sampling, no modulo bias).
    std::int64_t uniform(std::uint64_t stream, std::uint64_t counter, std::int64_t lo,
                         std::int64_t hi) const noexcept {
        const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
        if (span == 0) return static_cast<std::int64_t>(bits(stream, counter));
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t attempt = 0;
        for (;;) {
            const std::uint64_t r = bits(stream, counter ^ (attempt << 48));
            if (r < limit) return lo + static_cast<std::int64_t>(r % span);
            ++attempt;
        }
    }

    /// Independent generator for a sub-task (e.g. one seed of a batch).
    constexpr CounterRng split(std::uint64_t key) const noexcept { return CounterRng(bits(~key, key)); }

private:
    static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
        z += 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
};

}  // namespace maxplus
