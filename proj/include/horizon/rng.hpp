#pragma once

#include <cstdint>
#include <random>

namespace horizon {

/// SplitMix64 finalizer; stateless bit mixer used to derive stream seeds.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Deterministic per-(stream, index) seed from a master seed. Keeps episode
/// sampling independent of worker count and iteration order.
constexpr std::uint64_t derive_seed(std::uint64_t master,
                                    std::uint64_t stream,
                                    std::uint64_t index) noexcept {
    return mix64(mix64(mix64(master) ^ stream) ^ index);
}

/// Seeded random source. Draws uniforms from the raw engine output so results
/// are bit-reproducible across standard library implementations.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1), 53 mantissa bits.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    std::uint64_t bits() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

} // namespace horizon
