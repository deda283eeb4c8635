#pragma once

#include "eqlines/graph.hpp"

#include <chrono>
#include <cstddef>
#include <optional>
#include <vector>

namespace eqlines {

struct CliqueResult {
    std::size_t size = 0;
    /// Vertices of one maximum clique, ascending.
    std::vector<std::size_t> witness;
    /// False when the time budget ran out; `size` is then only a lower bound.
    bool exact = true;
};

/// Exact maximum clique by branch and bound with greedy-coloring bounds on
/// a degeneracy ordering. Deterministic for a given graph.
CliqueResult max_clique(const SimpleGraph& g,
                        std::optional<std::chrono::milliseconds> time_budget = std::nullopt);

/// Number of colors used by a lowest-index-first greedy coloring of the
/// subgraph induced by `candidates`; always at least its clique number.
std::size_t greedy_coloring_bound(const SimpleGraph& g, const Bitset& candidates);

bool is_clique(const SimpleGraph& g, const std::vector<std::size_t>& vertices);

}  // namespace eqlines
