#pragma once

#include "eqlines/lineset.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace eqlines {

/// Indices (ascending) of every line lying in the span of the `subset`
/// lines: j qualifies iff G_jS G_SS^{-1} G_Sj = G_jj. Throws RankDeficient
/// if the Gram block on `subset` is singular.
std::vector<std::size_t> span_closure(const LineSet& lines, std::span<const std::size_t> subset);

struct SearchRun {
    std::uint64_t run = 0;
    std::uint64_t seed = 0;
    std::vector<std::size_t> subset;
    std::vector<std::size_t> closure;
    std::size_t closure_size = 0;
    std::size_t rank = 0;
    bool rank_ok = false;
};

/// Per-run line of the search log.
struct RunRecord {
    std::uint64_t run = 0;
    std::uint64_t seed = 0;
    std::size_t closure_size = 0;
    bool rank_ok = false;
};

struct SearchSummary {
    std::size_t runs = 0;
    /// Largest closure; ties go to the earliest run. Empty if every draw was singular.
    std::optional<SearchRun> best;
    /// closure size -> number of runs; singular draws count under size 0.
    std::map<std::size_t, std::size_t> histogram;
    std::vector<RunRecord> log;
};

struct SearchOptions {
    unsigned threads = 1;
};

/// `runs` independent draws of a uniform `target_rank`-subset of the lines,
/// each followed by its span closure. Run r draws from a generator seeded
/// with derive_run_seed(seed, r), so the summary depends only on
/// (lines, target_rank, runs, seed).
SearchSummary random_search(const LineSet& lines, std::size_t target_rank, std::size_t runs,
                            std::uint64_t seed, const SearchOptions& options = {});

struct SubLineSet {
    LineSet lines;
    ValidationReport validation;
};

/// Principal Gram submatrix (and frame rows, if any) on `indices`, validated.
SubLineSet extract_sublineset(const LineSet& lines, std::span<const std::size_t> indices);

/// Primitive integer vectors spanning the orthogonal complement of the
/// frame vectors at `indices`.
std::vector<std::vector<std::int64_t>> orthogonal_complement(const IntegerFrame& frame,
                                                             std::span<const std::size_t> indices);

}  // namespace eqlines
