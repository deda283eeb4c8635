#include "eqlines/maxclique.hpp"

#include <algorithm>

namespace eqlines {

namespace {

// Removal order of repeated minimum-degree deletion, reversed so that the
// densest core comes first. Ties go to the lowest index.
std::vector<std::size_t> degeneracy_order(const SimpleGraph& g) {
    const std::size_t n = g.size();
    std::vector<std::size_t> degree(n);
    for (std::size_t v = 0; v < n; ++v) degree[v] = g.degree(v);
    std::vector<bool> removed(n, false);
    std::vector<std::size_t> order;
    order.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pick = n;
        for (std::size_t v = 0; v < n; ++v) {
            if (!removed[v] && (pick == n || degree[v] < degree[pick])) pick = v;
        }
        removed[pick] = true;
        order.push_back(pick);
        const Bitset& nb = g.neighbors(pick);
        for (std::size_t u = nb.next(); u < n; u = nb.next(u + 1)) {
            if (!removed[u]) --degree[u];
        }
    }
    std::reverse(order.begin(), order.end());
    return order;
}

class CliqueSearch {
public:
    CliqueSearch(const SimpleGraph& g, std::optional<std::chrono::milliseconds> budget)
        : order_(degeneracy_order(g)), adj_(g.size(), Bitset(g.size())) {
        const std::size_t n = g.size();
        std::vector<std::size_t> position(n);
        for (std::size_t i = 0; i < n; ++i) position[order_[i]] = i;
        for (std::size_t i = 0; i < n; ++i) {
            const Bitset& nb = g.neighbors(order_[i]);
            for (std::size_t u = nb.next(); u < n; u = nb.next(u + 1)) adj_[i].set(position[u]);
        }
        if (budget) deadline_ = std::chrono::steady_clock::now() + *budget;
    }

    CliqueResult run() {
        const std::size_t n = order_.size();
        if (n > 0) expand(Bitset::full(n));
        CliqueResult result;
        result.size = best_.size();
        for (std::size_t v : best_) result.witness.push_back(order_[v]);
        std::sort(result.witness.begin(), result.witness.end());
        result.exact = !timed_out_;
        return result;
    }

private:
    void expand(Bitset candidates) {
        if (out_of_time()) return;

        // Greedy sequential coloring; vertices listed class by class.
        std::vector<std::size_t> vertices;
        std::vector<std::size_t> colors;
        Bitset uncolored = candidates;
        std::size_t color = 0;
        while (!uncolored.none()) {
            ++color;
            Bitset available = uncolored;
            for (std::size_t v = available.next(); v < available.size(); v = available.next(v + 1)) {
                available.subtract(adj_[v]);
                uncolored.reset(v);
                vertices.push_back(v);
                colors.push_back(color);
            }
        }

        for (std::size_t k = vertices.size(); k-- > 0;) {
            if (current_.size() + colors[k] <= best_.size()) return;
            const std::size_t v = vertices[k];
            current_.push_back(v);
            Bitset next = candidates & adj_[v];
            if (next.none()) {
                if (current_.size() > best_.size()) best_ = current_;
            } else {
                expand(std::move(next));
            }
            current_.pop_back();
            candidates.reset(v);
            if (timed_out_) return;
        }
    }

    bool out_of_time() {
        if (!deadline_ || (++nodes_ & 1023u) != 0) return timed_out_;
        if (std::chrono::steady_clock::now() > *deadline_) timed_out_ = true;
        return timed_out_;
    }

    std::vector<std::size_t> order_;
    std::vector<Bitset> adj_;
    std::vector<std::size_t> current_;
    std::vector<std::size_t> best_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    std::size_t nodes_ = 0;
    bool timed_out_ = false;
};

}  // namespace

CliqueResult max_clique(const SimpleGraph& g, std::optional<std::chrono::milliseconds> time_budget) {
    return CliqueSearch(g, time_budget).run();
}

std::size_t greedy_coloring_bound(const SimpleGraph& g, const Bitset& candidates) {
    Bitset uncolored = candidates;
    std::size_t colors = 0;
    while (!uncolored.none()) {
        ++colors;
        Bitset available = uncolored;
        for (std::size_t v = available.next(); v < available.size(); v = available.next(v + 1)) {
            available.subtract(g.neighbors(v));
            uncolored.reset(v);
        }
    }
    return colors;
}

bool is_clique(const SimpleGraph& g, const std::vector<std::size_t>& vertices) {
    for (std::size_t a = 0; a < vertices.size(); ++a) {
        for (std::size_t b = a + 1; b < vertices.size(); ++b) {
            if (!g.has_edge(vertices[a], vertices[b])) return false;
        }
    }
    return true;
}

}  // namespace eqlines
