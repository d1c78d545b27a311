#pragma once

#include <cstdint>
#include <limits>

namespace swarmbench {

/// SplitMix64 (Steele, Lea & Flood 2014), the generator used for every
/// seeded draw in the harness. Pure 64-bit integer arithmetic, so streams are
/// bit-identical across compilers and platforms. Satisfies
/// UniformRandomBitGenerator, but engines should call uniform() /
/// uniform_int() so the draw-to-value mapping is fixed too (std
/// distributions are implementation-defined).
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    result_type operator()() noexcept { return next(); }
    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    /// Uniform real in [0, 1): top 53 bits scaled by 2^-53.
    double uniform() noexcept;

    /// Uniform integer in [lo, hi] (inclusive), unbiased via rejection.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

    std::uint64_t state() const noexcept { return state_; }

private:
    std::uint64_t state_;
};

} // namespace swarmbench
