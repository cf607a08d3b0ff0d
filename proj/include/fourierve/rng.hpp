#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace fve {

/// Portable pseudo-random source.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. The standard distributions are not (their algorithms vary by
/// library), so every draw goes through the helpers below, which depend only
/// on the raw 64-bit outputs. Generated instances are therefore identical on
/// every platform for a given seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1) with 53 bits of precision.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform on [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform integer on [0, bound), bound > 0. Unbiased by rejection.
    std::uint64_t below(std::uint64_t bound);

    /// Fair coin returning -1 or +1.
    int spin() { return (engine_() >> 63) != 0 ? 1 : -1; }

    bool bernoulli(double p) { return uniform01() < p; }

    /// `count` distinct values from [0, n) in random order (partial Fisher-Yates).
    std::vector<std::uint32_t> sample_distinct(std::uint32_t n, std::uint32_t count);

    /// A uniformly random permutation of [0, n).
    std::vector<std::uint32_t> permutation(std::uint32_t n) { return sample_distinct(n, n); }

private:
    std::mt19937_64 engine_;
};

/// SplitMix64 finalizer, used to derive independent child seeds.
constexpr std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    return mix_seed(mix_seed(base) ^ mix_seed(stream + 0x51ed2701ULL));
}

}  // namespace fve
