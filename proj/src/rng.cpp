#include "fourierve/rng.hpp"

#include <numeric>
#include <utility>

namespace fve {

std::uint64_t Rng::below(std::uint64_t bound) {
    // Largest multiple of bound that fits, so each residue is equally likely.
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
    std::uint64_t x = engine_();
    while (x > limit) x = engine_();
    return x % bound;
}

std::vector<std::uint32_t> Rng::sample_distinct(std::uint32_t n, std::uint32_t count) {
    std::vector<std::uint32_t> pool(n);
    std::iota(pool.begin(), pool.end(), 0u);
    for (std::uint32_t i = 0; i < count; ++i) {
        const auto j = i + static_cast<std::uint32_t>(below(n - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(count);
    return pool;
}

}  // namespace fve
