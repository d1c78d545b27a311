#include "swarmbench/rng.hpp"

#include <stdexcept>

namespace swarmbench {

double SplitMix64::uniform() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::int64_t SplitMix64::uniform_int(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) {
        throw std::invalid_argument("uniform_int: empty range");
    }
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
    if (span == std::numeric_limits<std::uint64_t>::max()) {
        return static_cast<std::int64_t>(next());
    }
    const std::uint64_t range = span + 1;
    // Largest multiple of range that fits; draws above it are rejected.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                (std::numeric_limits<std::uint64_t>::max() % range);
    std::uint64_t draw = next();
    while (draw >= limit) {
        draw = next();
    }
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + draw % range);
}

} // namespace swarmbench
