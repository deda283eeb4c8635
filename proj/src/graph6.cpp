#include "eqlines/graph6.hpp"

#include "eqlines/errors.hpp"

#include <sstream>

namespace eqlines {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int sextet(char c) {
    if (c < 63 || c > 126) {
        throw MalformedGraph6("byte " + std::to_string(static_cast<int>(static_cast<unsigned char>(c))) +
                              " is outside the graph6 range 63..126");
    }
    return c - 63;
}

}  // namespace

SimpleGraph decode_graph6(std::string_view text) {
    if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) {
        text.remove_suffix(1);
    }
    if (text.empty()) throw MalformedGraph6("empty graph6 record");

    std::size_t pos = 0;
    auto take = [&]() {
        if (pos >= text.size()) throw MalformedGraph6("graph6 record is truncated");
        return sextet(text[pos++]);
    };

    std::size_t n = 0;
    if (text[0] != 126) {
        n = static_cast<std::size_t>(take());
    } else {
        ++pos;
        std::size_t width = 3;
        if (pos < text.size() && text[pos] == 126) {
            ++pos;
            width = 6;
        }
        for (std::size_t i = 0; i < width; ++i) n = (n << 6) | static_cast<std::size_t>(take());
    }

    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t expected_bytes = (bits + 5) / 6;
    if (text.size() - pos != expected_bytes) {
        throw MalformedGraph6("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                              std::to_string(expected_bytes));
    }

    SimpleGraph g(n);
    std::size_t bit = 0;
    int current = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++bit) {
            if (bit % 6 == 0) current = take();
            if (current & (1 << (5 - bit % 6))) g.add_edge(i, j);
        }
    }
    if (bit % 6 != 0 && (current & ((1 << (6 - bit % 6)) - 1)) != 0) {
        throw MalformedGraph6("graph6 padding bits are not zero");
    }
    return g;
}

std::string encode_graph6(const SimpleGraph& g) {
    const std::size_t n = g.size();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n < 258048) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    } else {
        out.append(2, static_cast<char>(126));
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
    int current = 0;
    std::size_t bit = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++bit) {
            if (g.has_edge(i, j)) current |= 1 << (5 - bit % 6);
            if (bit % 6 == 5) {
                out.push_back(static_cast<char>(63 + current));
                current = 0;
            }
        }
    }
    if (bit % 6 != 0) out.push_back(static_cast<char>(63 + current));
    return out;
}

std::optional<SrgParameters> srg_check(const SimpleGraph& g) {
    const std::size_t n = g.size();
    if (n == 0) return std::nullopt;
    const std::size_t k = g.degree(0);
    for (std::size_t v = 1; v < n; ++v) {
        if (g.degree(v) != k) return std::nullopt;
    }
    std::optional<std::size_t> lambda;
    std::optional<std::size_t> mu;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            const std::size_t common = (g.neighbors(u) & g.neighbors(v)).count();
            auto& slot = g.has_edge(u, v) ? lambda : mu;
            if (!slot) {
                slot = common;
            } else if (*slot != common) {
                return std::nullopt;
            }
        }
    }
    if (!lambda || !mu) return std::nullopt;
    return SrgParameters{n, k, *lambda, *mu};
}

SignMatrix seidel_matrix(const SimpleGraph& g) {
    SignMatrix s(g.size());
    for (std::size_t u = 0; u < g.size(); ++u) {
        for (std::size_t v = u + 1; v < g.size(); ++v) s.set(u, v, g.has_edge(u, v) ? -1 : 1);
    }
    return s;
}

namespace {

std::string describe(const SrgParameters& p) {
    std::ostringstream os;
    os << "SRG(" << p.n << ", " << p.k << ", " << p.lambda << ", " << p.mu << ")";
    return os.str();
}

}  // namespace

Graph6Import from_graph6(std::string_view text, const Rational& angle, std::optional<SrgParameters> expected) {
    const SimpleGraph g = decode_graph6(text);
    Graph6Import result{from_sign_matrix(seidel_matrix(g), angle), srg_check(g), {}};
    if (!is_psd(result.lines.gram())) {
        throw NotPSD("I + " + to_string(angle) + " * S is not positive semidefinite for this graph");
    }
    if (!result.srg) {
        result.warnings.push_back("graph is not strongly regular");
    } else if (expected && *expected != *result.srg) {
        result.warnings.push_back("graph is " + describe(*result.srg) + ", expected " + describe(*expected));
    }
    return result;
}

}  // namespace eqlines
