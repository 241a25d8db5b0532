#ifndef BLINDEQ_RNG_HPP
#define BLINDEQ_RNG_HPP

#include <cmath>
#include <cstdint>
#include <string_view>

namespace blindeq {

/// Project-wide PRNG: SplitMix64. Every stochastic operation takes an
/// explicit seed and independent child streams are derived by hashing a
/// stage tag plus an index into the seed, so any single sequence of a run
/// can be reproduced in isolation.
class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Standard normal via the polar method. No cached spare: a stream's
    /// output depends only on its seed and call count.
    double next_gaussian() {
        for (;;) {
            const double u = 2.0 * next_double() - 1.0;
            const double v = 2.0 * next_double() - 1.0;
            const double s = u * u + v * v;
            if (s > 0.0 && s < 1.0) return u * std::sqrt(-2.0 * std::log(s) / s);
        }
    }

  private:
    uint64_t state_;
};

/// FNV-1a on a tag string.
constexpr uint64_t hash_tag(std::string_view tag) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (char c : tag) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
    }
    return h;
}

/// Deterministic child-seed derivation: master seed, stage tag, index.
inline uint64_t derive_seed(uint64_t master, std::string_view stage, uint64_t index) {
    SplitMix64 g(master ^ hash_tag(stage) ^ (0x9e3779b97f4a7c15ull * (index + 1)));
    return g.next_u64();
}

} // namespace blindeq

#endif
