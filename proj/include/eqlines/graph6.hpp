#pragma once

#include "eqlines/graph.hpp"
#include "eqlines/lineset.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eqlines {

/// Decodes one graph6 record. A leading ">>graph6<<" header and trailing
/// whitespace are accepted. Throws MalformedGraph6.
SimpleGraph decode_graph6(std::string_view text);
/// Encodes without header or newline.
std::string encode_graph6(const SimpleGraph& g);

struct SrgParameters {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t lambda = 0;
    std::size_t mu = 0;

    friend bool operator==(const SrgParameters&, const SrgParameters&) = default;
};

/// Parameters (n, k, lambda, mu) if the graph is strongly regular. Complete
/// and edgeless graphs give nullopt, as one of lambda and mu is undefined.
std::optional<SrgParameters> srg_check(const SimpleGraph& g);

/// Seidel matrix J - I - 2A: -1 on edges, +1 on non-edges.
SignMatrix seidel_matrix(const SimpleGraph& g);

struct Graph6Import {
    LineSet lines;
    std::optional<SrgParameters> srg;
    std::vector<std::string> warnings;
};

/// Lines with Gram I + angle * S for the Seidel matrix S of the decoded
/// graph. Throws MalformedGraph6, or NotPSD when the angle is incompatible
/// with the graph. A warning is recorded when the graph is not strongly
/// regular, or not with the `expected` parameters when those are given.
Graph6Import from_graph6(std::string_view text, const Rational& angle,
                         std::optional<SrgParameters> expected = std::nullopt);

}  // namespace eqlines
