#pragma once

#include <cstdint>

namespace pcc {

// splitmix64: the fixed 64-bit generator behind every random draw in this
// library. Plain integer arithmetic, so a given seed yields the same stream
// on every platform and toolchain.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform in [0,1): top 53 bits scaled by 2^-53
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform in [0,bound): modulo reduction; bias is negligible for the
    // bounds used here (<= a few thousand) and keeps the draw reproducible
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

// splitmix64 finalizer as a stateless mix
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// independent sub-stream seed for trial/index i of a master seed
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return mix64(master + 0x9E3779B97F4A7C15ULL * (index + 1));
}

} // namespace pcc
