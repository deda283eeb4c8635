#include "eqlines/rng.hpp"

#include "eqlines/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace eqlines {

std::uint64_t splitmix64(std::uint64_t x) {
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_run_seed(std::uint64_t master, std::uint64_t run) {
    return splitmix64(master + (run + 1) * 0x9E3779B97F4A7C15ULL);
}

std::uint64_t uniform_below(std::mt19937_64& engine, std::uint64_t bound) {
    if (bound == 0) throw OutOfRange("empty sampling range");
    // Largest multiple of bound that fits; values at or above it are redrawn.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = engine();
    } while (x >= limit);
    return x % bound;
}

std::vector<std::size_t> sample_subset(std::mt19937_64& engine, std::size_t n, std::size_t k) {
    if (k > n) throw OutOfRange("subset larger than the population");
    std::vector<std::size_t> pool(n);
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(uniform_below(engine, n - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
}

}  // namespace eqlines
