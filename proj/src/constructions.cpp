#include "eqlines/constructions.hpp"

#include "eqlines/errors.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace eqlines {

std::array<int, 8> octad_points(Octad octad) {
    std::array<int, 8> points{};
    std::size_t k = 0;
    for (int p = 1; p <= 24; ++p) {
        if (octad & (1u << (p - 1))) {
            if (k == points.size()) throw Error("mask has more than 8 points");
            points[k++] = p;
        }
    }
    if (k != points.size()) throw Error("mask has fewer than 8 points");
    return points;
}

Octad octad_from_points(std::span<const int> points) {
    Octad mask = 0;
    for (int p : points) {
        if (p < 1 || p > 24) throw OutOfRange("octad point outside 1..24");
        mask |= 1u << (p - 1);
    }
    if (std::popcount(mask) != 8) throw Error("an octad needs 8 distinct points");
    return mask;
}

OctadDesign generate_octads() {
    OctadDesign design;
    design.octads.reserve(759);
    // Indices of the current 8-subset of {0..23}, advanced in lexicographic order.
    std::array<int, 8> idx{0, 1, 2, 3, 4, 5, 6, 7};
    while (true) {
        Octad mask = 0;
        for (int i : idx) mask |= 1u << i;
        const bool keep = std::none_of(design.octads.begin(), design.octads.end(),
                                       [mask](Octad kept) { return std::popcount(kept & mask) > 4; });
        if (keep) design.octads.push_back(mask);

        int k = 7;
        while (k >= 0 && idx[k] == 24 - 8 + k) --k;
        if (k < 0) break;
        ++idx[k];
        for (int i = k + 1; i < 8; ++i) idx[i] = idx[i - 1] + 1;
    }
    return design;
}

IntVector24 unit_vector(int i) {
    if (i < 1 || i > 24) throw OutOfRange("coordinate index outside 1..24");
    IntVector24 v{};
    v[i - 1] = 1;
    return v;
}

IntVector24 all_ones() {
    IntVector24 v;
    v.fill(1);
    return v;
}

std::int64_t dot(const IntVector24& x, const IntVector24& y) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

IntVector24 octad_vector(Octad octad) {
    IntVector24 v;
    for (int i = 0; i < 24; ++i) v[i] = (octad & (1u << i)) ? 3 : -1;
    v[0] -= 4;
    return v;
}

namespace constraints {

namespace {

IntVector24 from_terms(std::initializer_list<std::pair<int, std::int64_t>> terms) {
    IntVector24 v{};
    for (auto [i, coeff] : terms) v[i - 1] += coeff;
    return v;
}

}  // namespace

IntVector24 e1_minus(int i) {
    IntVector24 v = unit_vector(1);
    v[i - 1] -= 1;
    return v;
}

IntVector24 c() {
    IntVector24 v = all_ones();
    v[0] += 4;
    return v;
}

IntVector24 c1() {
    return from_terms({{2, 1}, {3, 1}, {10, 1}, {12, 1}, {13, 1}, {14, 1}, {21, 1}, {24, 1}});
}

IntVector24 c2() {
    return from_terms({{2, 1}, {3, 1}, {6, 1}, {7, 1}, {18, 1}, {19, 1}, {22, 1}, {23, 1}});
}

IntVector24 u1() {
    return from_terms({{4, 1},   {5, 1},   {6, 6},   {7, -3},  {8, 1},   {9, 1},  {10, 6},
                       {11, 1},  {12, -3}, {13, 6},  {14, -3}, {15, 1},  {16, 1}, {17, 1},
                       {18, -3}, {19, -3}, {20, -8}, {21, -3}, {22, -3}, {23, 6}, {24, -3}});
}

IntVector24 u2() {
    return from_terms({{4, 5},   {5, 5},   {6, -3},  {7, -3},  {8, -4},  {9, 5},  {11, -4},
                       {15, -4}, {16, 5},  {17, -4}, {18, -3}, {19, 6},  {20, -4}, {22, 6},
                       {23, -3}});
}

}  // namespace constraints

LineSet lines_from_integer_vectors(std::span<const IntVector24> vectors, std::int64_t squared_norm,
                                   const Rational& angle) {
    const std::size_t n = vectors.size();
    RatMatrix gram(n, n);
    IntegerFrame frame;
    frame.squared_norm = squared_norm;
    for (std::size_t i = 0; i < n; ++i) {
        if (dot(vectors[i], vectors[i]) != squared_norm) {
            throw Error("integer vector " + std::to_string(i) + " has the wrong squared norm");
        }
        frame.vectors.emplace_back(vectors[i].begin(), vectors[i].end());
        for (std::size_t j = i; j < n; ++j) {
            Rational q(dot(vectors[i], vectors[j]), squared_norm);
            q.canonicalize();
            gram(i, j) = q;
            gram(j, i) = q;
        }
    }
    return LineSet(angle, std::move(gram), std::move(frame));
}

namespace {

const Rational& one_fifth() {
    static const Rational a = make_rational(1, 5);
    return a;
}

constexpr std::int64_t kOctadNorm = 80;

OctadFamily make_family(std::vector<Octad> octads) {
    OctadFamily family;
    family.octads = std::move(octads);
    family.vectors.reserve(family.octads.size());
    for (Octad o : family.octads) family.vectors.push_back(octad_vector(o));
    family.lines = lines_from_integer_vectors(family.vectors, kOctadNorm, one_fifth());
    return family;
}

constexpr std::array<std::array<int, 8>, 90> kTaylorTable{{
    {{1, 3, 4, 5, 9, 15, 18, 24}},
    {{1, 3, 4, 5, 10, 16, 17, 23}},
    {{1, 3, 4, 5, 11, 13, 20, 22}},
    {{1, 3, 4, 6, 9, 16, 20, 21}},
    {{1, 3, 4, 7, 11, 15, 17, 21}},
    {{1, 3, 4, 8, 9, 14, 17, 22}},
    {{1, 3, 4, 8, 11, 16, 19, 24}},
    {{1, 3, 4, 8, 12, 15, 20, 23}},
    {{1, 3, 5, 6, 14, 15, 17, 20}},
    {{1, 3, 5, 7, 9, 11, 14, 16}},
    {{1, 3, 5, 8, 9, 10, 19, 20}},
    {{1, 3, 5, 8, 11, 12, 17, 18}},
    {{1, 3, 5, 8, 15, 16, 21, 22}},
    {{1, 3, 6, 8, 9, 11, 13, 15}},
    {{1, 3, 7, 8, 13, 16, 17, 20}},
    {{1, 3, 9, 11, 17, 20, 23, 24}},
    {{1, 3, 9, 12, 15, 16, 17, 19}},
    {{1, 3, 10, 11, 15, 16, 18, 20}},
    {{1, 4, 5, 6, 10, 12, 18, 20}},
    {{1, 4, 5, 6, 13, 15, 21, 23}},
    {{1, 4, 5, 6, 14, 16, 22, 24}},
    {{1, 4, 5, 7, 9, 10, 21, 22}},
    {{1, 4, 5, 7, 11, 12, 23, 24}},
    {{1, 4, 5, 7, 13, 14, 17, 18}},
    {{1, 4, 6, 7, 9, 12, 14, 15}},
    {{1, 4, 6, 7, 10, 11, 13, 16}},
    {{1, 4, 6, 8, 9, 10, 23, 24}},
    {{1, 4, 6, 8, 11, 12, 21, 22}},
    {{1, 4, 6, 8, 13, 14, 19, 20}},
    {{1, 4, 7, 8, 10, 12, 17, 19}},
    {{1, 4, 7, 8, 13, 15, 22, 24}},
    {{1, 4, 7, 8, 14, 16, 21, 23}},
    {{1, 4, 9, 10, 14, 16, 18, 19}},
    {{1, 4, 9, 12, 17, 18, 21, 23}},
    {{1, 4, 9, 12, 19, 20, 22, 24}},
    {{1, 4, 10, 11, 17, 18, 22, 24}},
    {{1, 4, 10, 11, 19, 20, 21, 23}},
    {{1, 4, 11, 12, 13, 15, 18, 19}},
    {{1, 4, 13, 16, 17, 19, 21, 22}},
    {{1, 4, 13, 16, 18, 20, 23, 24}},
    {{1, 4, 14, 15, 17, 19, 23, 24}},
    {{1, 4, 14, 15, 18, 20, 21, 22}},
    {{1, 5, 6, 7, 9, 13, 20, 24}},
    {{1, 5, 6, 7, 12, 16, 17, 21}},
    {{1, 5, 6, 8, 9, 14, 18, 21}},
    {{1, 5, 6, 8, 10, 13, 17, 22}},
    {{1, 5, 6, 8, 12, 15, 19, 24}},
    {{1, 5, 7, 8, 10, 16, 18, 24}},
    {{1, 5, 7, 8, 11, 13, 19, 21}},
    {{1, 5, 7, 8, 12, 14, 20, 22}},
    {{1, 5, 9, 10, 11, 13, 18, 23}},
    {{1, 5, 9, 13, 14, 15, 19, 22}},
    {{1, 5, 9, 16, 19, 21, 23, 24}},
    {{1, 5, 10, 11, 12, 16, 19, 22}},
    {{1, 5, 10, 15, 17, 18, 19, 21}},
    {{1, 5, 10, 15, 20, 22, 23, 24}},
    {{1, 5, 11, 14, 17, 21, 22, 23}},
    {{1, 5, 11, 14, 18, 19, 20, 24}},
    {{1, 5, 12, 13, 17, 19, 20, 23}},
    {{1, 5, 12, 14, 15, 16, 18, 23}},
    {{1, 6, 7, 8, 10, 15, 20, 21}},
    {{1, 6, 7, 8, 11, 14, 17, 24}},
    {{1, 6, 9, 10, 11, 14, 20, 22}},
    {{1, 6, 9, 11, 12, 16, 18, 24}},
    {{1, 6, 9, 13, 14, 16, 17, 23}},
    {{1, 6, 9, 15, 17, 21, 22, 24}},
    {{1, 6, 10, 11, 12, 15, 17, 23}},
    {{1, 6, 10, 16, 17, 19, 20, 24}},
    {{1, 6, 11, 13, 17, 18, 20, 21}},
    {{1, 6, 11, 14, 15, 16, 19, 21}},
    {{1, 6, 12, 13, 15, 16, 20, 22}},
    {{1, 7, 9, 10, 11, 15, 19, 24}},
    {{1, 7, 9, 10, 12, 16, 20, 23}},
    {{1, 7, 9, 11, 12, 13, 17, 22}},
    {{1, 7, 9, 13, 15, 16, 18, 21}},
    {{1, 7, 9, 14, 17, 19, 20, 21}},
    {{1, 7, 10, 14, 15, 16, 17, 22}},
    {{1, 7, 11, 13, 14, 15, 20, 23}},
    {{1, 7, 11, 16, 20, 21, 22, 24}},
    {{1, 7, 12, 15, 17, 18, 20, 24}},
    {{1, 8, 9, 10, 12, 15, 18, 22}},
    {{1, 8, 9, 11, 12, 14, 19, 23}},
    {{1, 8, 9, 13, 17, 18, 19, 24}},
    {{1, 8, 9, 13, 20, 21, 22, 23}},
    {{1, 8, 10, 13, 15, 16, 19, 23}},
    {{1, 8, 10, 14, 17, 18, 20, 23}},
    {{1, 8, 11, 13, 14, 16, 18, 22}},
    {{1, 8, 11, 15, 18, 21, 23, 24}},
    {{1, 8, 12, 16, 17, 22, 23, 24}},
    {{1, 8, 12, 16, 18, 19, 20, 21}},
}};

constexpr std::array<std::size_t, 20> kTaylorBasis{6,  7,  13, 19, 21, 24, 27, 34, 43, 45,
                                                   48, 52, 57, 61, 66, 70, 74, 80, 82, 89};

constexpr std::array<std::size_t, 14> kTremainBasis{1, 3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 23, 25, 27};

constexpr std::array<TremainColumn, 28> kTremainColumns{{
    {{{ 1,  1,  0,  1,  0,  0,  0}}, 1},
    {{{ 1, -1,  0, -1,  0,  0,  0}}, 1},
    {{{-1,  1,  0, -1,  0,  0,  0}}, 1},
    {{{-1, -1,  0,  1,  0,  0,  0}}, 1},
    {{{ 0,  1,  1,  0,  1,  0,  0}}, 2},
    {{{ 0,  1, -1,  0, -1,  0,  0}}, 2},
    {{{ 0, -1,  1,  0, -1,  0,  0}}, 2},
    {{{ 0, -1, -1,  0,  1,  0,  0}}, 2},
    {{{ 0,  0,  1,  1,  0,  1,  0}}, 3},
    {{{ 0,  0,  1, -1,  0, -1,  0}}, 3},
    {{{ 0,  0, -1,  1,  0, -1,  0}}, 3},
    {{{ 0,  0, -1, -1,  0,  1,  0}}, 3},
    {{{ 0,  0,  0,  1,  1,  0,  1}}, 4},
    {{{ 0,  0,  0,  1, -1,  0, -1}}, 4},
    {{{ 0,  0,  0, -1,  1,  0, -1}}, 4},
    {{{ 0,  0,  0, -1, -1,  0,  1}}, 4},
    {{{ 1,  0,  0,  0,  1,  1,  0}}, 5},
    {{{-1,  0,  0,  0,  1, -1,  0}}, 5},
    {{{-1,  0,  0,  0, -1,  1,  0}}, 5},
    {{{ 1,  0,  0,  0, -1, -1,  0}}, 5},
    {{{ 0,  1,  0,  0,  0,  1,  1}}, 6},
    {{{ 0, -1,  0,  0,  0,  1, -1}}, 6},
    {{{ 0, -1,  0,  0,  0, -1,  1}}, 6},
    {{{ 0,  1,  0,  0,  0, -1, -1}}, 6},
    {{{ 1,  0,  1,  0,  0,  0,  1}}, 7},
    {{{-1,  0, -1,  0,  0,  0,  1}}, 7},
    {{{ 1,  0, -1,  0,  0,  0, -1}}, 7},
    {{{-1,  0,  1,  0,  0,  0, -1}}, 7},
}};

}  // namespace

OctadFamily filter_orthogonal(const OctadFamily& family, std::span<const IntVector24> constraints) {
    std::vector<Octad> kept;
    for (std::size_t i = 0; i < family.vectors.size(); ++i) {
        const bool orthogonal = std::all_of(constraints.begin(), constraints.end(),
                                            [&](const IntVector24& c) { return dot(family.vectors[i], c) == 0; });
        if (orthogonal) kept.push_back(family.octads[i]);
    }
    if (kept.empty()) throw EmptyResult("no member is orthogonal to every constraint");
    return make_family(std::move(kept));
}

OctadFamily octads_through_point_one(const OctadDesign& design) {
    std::vector<Octad> kept;
    for (Octad o : design.octads) {
        if (o & 1u) kept.push_back(o);
    }
    return make_family(std::move(kept));
}

std::span<const std::array<int, 8>> taylor_table() { return kTaylorTable; }

std::span<const std::size_t> taylor_basis_one_based() { return kTaylorBasis; }

OctadFamily taylor_90() {
    const OctadFamily through_one = octads_through_point_one(generate_octads());
    const std::array<IntVector24, 4> filters{constraints::e1_minus(2), constraints::c(), constraints::c1(),
                                             constraints::c2()};
    OctadFamily family = filter_orthogonal(through_one, filters);
    if (family.octads.size() != kTaylorTable.size()) {
        throw ConstructionMismatch("expected 90 octads, found " + std::to_string(family.octads.size()));
    }
    // Masks compare in reverse-lexicographic order, so match by point lists.
    std::vector<std::array<int, 8>> found;
    for (Octad o : family.octads) found.push_back(octad_points(o));
    std::sort(found.begin(), found.end());
    for (std::size_t i = 0; i < found.size(); ++i) {
        if (found[i] != kTaylorTable[i]) {
            throw ConstructionMismatch("octad " + std::to_string(i + 1) + " differs from the reference table");
        }
    }
    std::vector<Octad> ordered;
    for (const auto& points : found) ordered.push_back(octad_from_points(points));
    return make_family(std::move(ordered));
}

OctadFamily asche_72() {
    const OctadFamily taylor = taylor_90();
    std::vector<Octad> kept;
    for (Octad o : taylor.octads) {
        if (!(o & (1u << 2))) kept.push_back(o);
    }
    if (kept.size() != 72) {
        throw ConstructionMismatch("expected 72 octads avoiding 3, found " + std::to_string(kept.size()));
    }
    OctadFamily family = make_family(std::move(kept));
    const IntVector24 e13 = constraints::e1_minus(3);
    for (const auto& v : family.vectors) {
        if (dot(v, e13) != 0) throw ConstructionMismatch("kept vector not orthogonal to e1 - e3");
    }
    return family;
}

std::span<const TremainColumn> tremain_columns() { return kTremainColumns; }

std::span<const std::size_t> tremain_basis_one_based() { return kTremainBasis; }

Rational tremain_inner_product(const TremainColumn& a, const TremainColumn& b) {
    long s = 0;
    for (std::size_t r = 0; r < a.circle.size(); ++r) s += a.circle[r] * b.circle[r];
    if (a.star_row == b.star_row) s += 2;
    return make_rational(s, 5);
}

LineSet tremain_28() {
    const auto cols = tremain_columns();
    RatMatrix gram(cols.size(), cols.size());
    for (std::size_t i = 0; i < cols.size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) gram(i, j) = tremain_inner_product(cols[i], cols[j]);
    }
    return LineSet(one_fifth(), std::move(gram));
}

}  // namespace eqlines
