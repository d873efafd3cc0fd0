#pragma once

#include <cstdint>

namespace sdo {

// splitmix64 finalizer (Steele/Lea/Flood). Used standalone as a generator
// and as the mixer for counter-based seed derivation.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

struct SplitMix64 {
    std::uint64_t state = 0;

    constexpr std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in the open interval (0, 1); never 0, safe under log().
    double next_unit() {
        return (static_cast<double>(next() >> 12) + 0.5) * 0x1.0p-52;
    }
};

// Counter-based seed expansion: a pure function of (master, stream, index),
// so every derived generator is reproducible independently of the order in
// which streams are consumed.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                                    std::uint64_t index) {
    return mix64(mix64(mix64(master) ^ stream) ^ index);
}

// Stream tags for derive_seed.
namespace seed_stream {
inline constexpr std::uint64_t kWeightExc = 1;
inline constexpr std::uint64_t kWeightInh = 2;
inline constexpr std::uint64_t kRowLfsr = 3;
inline constexpr std::uint64_t kSample = 4;
inline constexpr std::uint64_t kPixel = 5;
inline constexpr std::uint64_t kTeacher = 6;
inline constexpr std::uint64_t kSplit = 7;
inline constexpr std::uint64_t kEval = 8;
}  // namespace seed_stream

}  // namespace sdo
