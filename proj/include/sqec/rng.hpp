#pragma once

#include <cstdint>

namespace sqec {

// SplitMix64 finalizer (Steele, Lea, Flood). Bijective 64-bit avalanche.
inline constexpr std::uint64_t mix64(std::uint64_t x) {
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Keyed SplitMix64 stream. Construction is two words of state, so every
// (trial, shot) pair owns an independent stream and aggregate results do not
// depend on execution order.
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix64(state_);
    }

    // Uniform in [0, 1), 53 significant bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double prob) { return next_double() < prob; }

  private:
    std::uint64_t state_;
};

// Stream seed for one shot of one trial under a master seed.
inline constexpr std::uint64_t substream_seed(std::uint64_t master, std::uint64_t trial,
                                              std::uint64_t shot) {
    std::uint64_t s = mix64(master ^ 0x8e2f1c5ad27a9b43ULL);
    s = mix64(s + 0x9e3779b97f4a7c15ULL * (trial + 1));
    s = mix64(s + 0x9e3779b97f4a7c15ULL * (shot + 1));
    return s;
}

}  // namespace sqec
