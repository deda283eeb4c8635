#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <vector>

namespace eqlines {

/// Fixed-size bitset over vertex indices.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    static Bitset full(std::size_t size);

    std::size_t size() const noexcept { return size_; }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    std::size_t count() const noexcept;
    bool none() const noexcept;
    /// Lowest set index at or after `from`, or size() if none.
    std::size_t next(std::size_t from = 0) const noexcept;

    Bitset& operator&=(const Bitset& other);
    /// this &= ~other
    Bitset& subtract(const Bitset& other);

    const std::vector<std::uint64_t>& words() const noexcept { return words_; }

    friend bool operator==(const Bitset&, const Bitset&) = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

Bitset operator&(Bitset a, const Bitset& b);

/// Undirected simple graph with one adjacency bitset per vertex.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(std::size_t n);

    std::size_t size() const noexcept { return rows_.size(); }
    /// Ignores self-loops.
    void add_edge(std::size_t u, std::size_t v);
    bool has_edge(std::size_t u, std::size_t v) const { return rows_[u].test(v); }
    const Bitset& neighbors(std::size_t v) const { return rows_[v]; }
    std::size_t degree(std::size_t v) const { return rows_[v].count(); }
    std::size_t edge_count() const;

    static SimpleGraph complete(std::size_t n);
    static SimpleGraph cycle(std::size_t n);

    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

private:
    std::vector<Bitset> rows_;
};

/// DIMACS edge format ("p edge n m" followed by 1-based "e u v" lines).
void write_dimacs(std::ostream& out, const SimpleGraph& g);

}  // namespace eqlines
