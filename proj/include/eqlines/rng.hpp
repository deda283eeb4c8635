#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace eqlines {

/// Identifier of the sampling scheme below; bump it whenever the mapping
/// from (seed, run index) to subsets changes.
inline constexpr const char* kSamplerVersion = "eqlines-sampler-v1";

/// SplitMix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x);

/// Seed of run `run` under master seed `master`:
/// splitmix64(master + (run + 1) * 0x9E3779B97F4A7C15), i.e. output run + 1
/// of the SplitMix64 generator started from state `master`.
std::uint64_t derive_run_seed(std::uint64_t master, std::uint64_t run);

/// Uniform integer in [0, bound) from a 64-bit Mersenne Twister, by
/// rejection, so the stream is identical on every standard library.
std::uint64_t uniform_below(std::mt19937_64& engine, std::uint64_t bound);

/// Uniform k-subset of {0, ..., n-1} by partial Fisher-Yates, sorted.
std::vector<std::size_t> sample_subset(std::mt19937_64& engine, std::size_t n, std::size_t k);

}  // namespace eqlines
