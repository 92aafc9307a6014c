#pragma once

#include <cmath>
#include <cstdint>

namespace fresco {

// 64-bit finalizer from the SplitMix64 generator. Full avalanche: flipping
// any input bit flips each output bit with probability ~1/2.
//
// Constants (fixed for reproducibility, including cross-language ports):
//   z ^= z >> 30;  z *= 0xBF58476D1CE4E5B9
//   z ^= z >> 27;  z *= 0x94D049BB133111EB
//   z ^= z >> 31
inline constexpr std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

// Golden-ratio increment used to absorb successive words before mixing.
inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

// Absorb one word into the running state. The +1 keeps a zero word from
// being a fixed point of the absorption step.
inline constexpr std::uint64_t absorb(std::uint64_t state, std::uint64_t word) {
    return mix64(state + kGoldenGamma * (word + 1));
}

// Two open-interval uniforms from one digest: each 32-bit half is offset by
// 0.5 so the result lies strictly inside (0,1) and log() below is safe.
inline void digest_to_uniforms(std::uint64_t digest, double& u1, double& u2) {
    const double scale = 1.0 / 4294967296.0;  // 2^-32
    u1 = (static_cast<double>(digest >> 32) + 0.5) * scale;
    u2 = (static_cast<double>(digest & 0xFFFFFFFFULL) + 0.5) * scale;
}

// Box-Muller on the two digest uniforms; returns both outputs.
inline void digest_to_gaussian_pair(std::uint64_t digest, double& z1, double& z2) {
    double u1, u2;
    digest_to_uniforms(digest, u1, u2);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * 3.14159265358979323846 * u2;
    z1 = r * std::cos(theta);
    z2 = r * std::sin(theta);
}

// First Box-Muller output only. This is the fixed digest -> N(0,1) rule.
inline double digest_to_gaussian(std::uint64_t digest) {
    double z1, z2;
    digest_to_gaussian_pair(digest, z1, z2);
    return z1;
}

// Counter-based stream of standard normal deviates. Value pairs come from
// digest(seed, counter); the stream is a pure function of (seed, draw index),
// so it is reproducible across platforms and safe to re-create anywhere.
class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t seed) : seed_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const std::uint64_t digest = mix64(absorb(seed_, counter_++));
        double z1;
        digest_to_gaussian_pair(digest, z1, spare_);
        have_spare_ = true;
        return z1;
    }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// Derive a child seed from a parent seed and up to three role/index words.
inline constexpr std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t a,
                                           std::uint64_t b = 0, std::uint64_t c = 0) {
    return mix64(absorb(absorb(absorb(parent, a), b), c));
}

}  // namespace fresco
