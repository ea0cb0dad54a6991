#pragma once

#include <cmath>
#include <cstdint>

namespace offres {

/// SplitMix64; used to expand seeds into full generator state.
struct SplitMix64 {
    std::uint64_t state;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

/// Deterministic per-stream seed derivation: the stream for (master, index)
/// depends only on those two values, never on scheduling.
inline std::uint64_t derive_stream_seed(std::uint64_t master_seed,
                                        std::uint64_t index) {
    SplitMix64 mix{master_seed ^ (0x9e3779b97f4a7c15ULL * (index + 1))};
    mix.next();
    return mix.next();
}

/// xoshiro256++ stream with uniform/exponential draws built directly from
/// the integer output, so results are identical on every platform.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) {
        SplitMix64 mix{seed};
        for (auto& word : s_) word = mix.next();
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1).
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Exponential waiting time with the given rate (rate > 0).
    double exponential(double rate) {
        return -std::log1p(-uniform()) / rate;
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t s_[4];
};

}  // namespace offres
