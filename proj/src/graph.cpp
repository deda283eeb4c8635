#include "eqlines/graph.hpp"

#include "eqlines/errors.hpp"

namespace eqlines {

Bitset Bitset::full(std::size_t size) {
    Bitset b(size);
    for (auto& w : b.words_) w = ~std::uint64_t{0};
    if (size % 64 != 0 && !b.words_.empty()) {
        b.words_.back() = (std::uint64_t{1} << (size % 64)) - 1;
    }
    return b;
}

std::size_t Bitset::count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool Bitset::none() const noexcept {
    for (auto w : words_) {
        if (w) return false;
    }
    return true;
}

std::size_t Bitset::next(std::size_t from) const noexcept {
    if (from >= size_) return size_;
    std::size_t wi = from >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
        if (w) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
        if (++wi == words_.size()) return size_;
        w = words_[wi];
    }
}

Bitset& Bitset::operator&=(const Bitset& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

Bitset& Bitset::subtract(const Bitset& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
}

Bitset operator&(Bitset a, const Bitset& b) {
    a &= b;
    return a;
}

SimpleGraph::SimpleGraph(std::size_t n) : rows_(n, Bitset(n)) {}

void SimpleGraph::add_edge(std::size_t u, std::size_t v) {
    if (u >= size() || v >= size()) throw OutOfRange("edge endpoint out of range");
    if (u == v) return;
    rows_[u].set(v);
    rows_[v].set(u);
}

std::size_t SimpleGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& r : rows_) twice += r.count();
    return twice / 2;
}

SimpleGraph SimpleGraph::complete(std::size_t n) {
    SimpleGraph g(n);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
    }
    return g;
}

SimpleGraph SimpleGraph::cycle(std::size_t n) {
    SimpleGraph g(n);
    for (std::size_t u = 0; u < n && n > 2; ++u) g.add_edge(u, (u + 1) % n);
    return g;
}

void write_dimacs(std::ostream& out, const SimpleGraph& g) {
    out << "p edge " << g.size() << ' ' << g.edge_count() << '\n';
    for (std::size_t u = 0; u < g.size(); ++u) {
        for (std::size_t v = g.neighbors(u).next(u + 1); v < g.size(); v = g.neighbors(u).next(v + 1)) {
            out << "e " << u + 1 << ' ' << v + 1 << '\n';
        }
    }
}

}  // namespace eqlines
