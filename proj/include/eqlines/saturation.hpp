#pragma once

#include "eqlines/graph.hpp"
#include "eqlines/lineset.hpp"
#include "eqlines/maxclique.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace eqlines {

/// A unit vector in the span of the basis lines, meeting basis line k at
/// inner product signs[k] * angle. `coeffs` are its coordinates in the
/// basis: coeffs = angle * G_B^{-1} * signs.
struct Candidate {
    std::vector<std::int8_t> signs;
    RatVector coeffs;
};

/// Basis lines (0-based indices into `lines`). Without an override, scans
/// left to right and keeps each line that raises the rank. An override must
/// have rank(lines) entries with a nonsingular Gram block; otherwise NotABasis.
std::vector<std::size_t> select_basis(const LineSet& lines,
                                      std::optional<std::span<const std::size_t>> override = std::nullopt);

using ProgressSink = std::function<void(std::uint64_t done, std::uint64_t total)>;

struct EnumerationOptions {
    unsigned threads = 1;
    ProgressSink progress;
    /// Progress is reported every 2^16 patterns.
    std::uint64_t progress_interval = std::uint64_t{1} << 16;
};

/// All unit vectors meeting every basis line at +-angle, with the first
/// sign fixed to +. Patterns are visited in Gray-code order, one sign flip
/// per step; the result is sorted lexicographically by sign pattern
/// (+ before -). Output does not depend on the thread count.
std::vector<Candidate> enumerate_candidates(const LineSet& lines, std::span<const std::size_t> basis,
                                            const EnumerationOptions& options = {});

/// Exact inner product of two candidates: angle * (a.signs . b.coeffs).
Rational candidate_inner_product(const Candidate& a, const Candidate& b, const Rational& angle);

/// Vertices are candidates; an edge joins two candidates whose inner
/// product is +-angle. Throws Error if two candidates describe the same line.
SimpleGraph build_compatibility_graph(std::span<const Candidate> candidates, const LineSet& lines,
                                      std::span<const std::size_t> basis);

struct SaturationOptions {
    EnumerationOptions enumeration;
    std::optional<std::chrono::milliseconds> clique_budget;
};

struct SaturationReport {
    std::vector<std::size_t> basis;
    std::size_t candidate_count = 0;
    std::size_t clique_number = 0;
    /// False when the clique search hit its budget; clique_number is then a lower bound.
    bool clique_exact = true;
    std::vector<std::size_t> clique_witness;
    /// Upper bound on any equiangular set containing the basis lines.
    std::size_t upper_bound = 0;
    bool saturated = false;
    /// Every non-basis line was found among the candidates (up to sign)...
    bool non_basis_lines_found = false;
    /// ...and those candidates are pairwise compatible.
    bool non_basis_lines_form_clique = false;
};

/// Throws Error for a line set that is not equiangular.
SaturationReport check_saturated(const LineSet& lines,
                                 std::optional<std::span<const std::size_t>> basis_override = std::nullopt,
                                 const SaturationOptions& options = {});

}  // namespace eqlines
