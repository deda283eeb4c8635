#pragma once

#include "eqlines/lineset.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace eqlines {

/// An 8-subset of {1, ..., 24} as a bitmask; bit (p - 1) is point p.
using Octad = std::uint32_t;
using IntVector24 = std::array<std::int64_t, 24>;

std::array<int, 8> octad_points(Octad octad);
Octad octad_from_points(std::span<const int> points);

/// The blocks of the Witt design S(5,8,24), in the order the greedy
/// lexicographic scan finds them.
struct OctadDesign {
    std::vector<Octad> octads;
};

/// Scans the 8-subsets of {1..24} in lexicographic order, keeping a subset
/// iff it meets every kept subset in at most 4 points.
OctadDesign generate_octads();

/// e_i (1-based) and e_1 + ... + e_24.
IntVector24 unit_vector(int i);
IntVector24 all_ones();
std::int64_t dot(const IntVector24& x, const IntVector24& y);

/// 4 * sum_{i in E} e_i - 4 e_1 - e_Sigma; squared norm 80 when 1 is in E.
IntVector24 octad_vector(Octad octad);

/// Named constraint vectors used by the octad constructions.
namespace constraints {
IntVector24 e1_minus(int i);  ///< e_1 - e_i
IntVector24 c();              ///< 4 e_1 + e_Sigma
IntVector24 c1();
IntVector24 c2();
IntVector24 u1();
IntVector24 u2();
}  // namespace constraints

/// Octads together with their integer vectors and the induced line set.
struct OctadFamily {
    std::vector<Octad> octads;
    std::vector<IntVector24> vectors;
    LineSet lines;
};

/// Line set from integer vectors of common squared norm; the Gram is
/// <v_i, v_j> / squared_norm. Throws Error if a norm differs.
LineSet lines_from_integer_vectors(std::span<const IntVector24> vectors,
                                   std::int64_t squared_norm, const Rational& angle);

/// Members of `family` orthogonal to every constraint. Throws EmptyResult
/// if nothing survives.
OctadFamily filter_orthogonal(const OctadFamily& family, std::span<const IntVector24> constraints);

/// Octads containing point 1, as vectors of norm^2 80, angle 1/5 (no filtering).
OctadFamily octads_through_point_one(const OctadDesign& design);

/// The 90 lines in R^20 at angle 1/5. Throws ConstructionMismatch if the
/// survivors differ from the reference table.
OctadFamily taylor_90();
/// The 72 lines in R^19: taylor_90 minus the 18 octads containing 3.
OctadFamily asche_72();

/// The reference 90 octads in lexicographic order.
std::span<const std::array<int, 8>> taylor_table();
/// The basis indices (1-based, into taylor_table) used for the 90-line check.
std::span<const std::size_t> taylor_basis_one_based();

/// One column of the 28-line configuration in R^14: rows 1-7 carry
/// entries in {-1, 0, +1} times sqrt(1/5) (exactly three nonzero), and row
/// 7 + star_row carries sqrt(2/5).
struct TremainColumn {
    std::array<int, 7> circle{};
    int star_row = 1;
};

std::span<const TremainColumn> tremain_columns();
/// (circle_i . circle_j + 2 [star rows equal]) / 5.
Rational tremain_inner_product(const TremainColumn& a, const TremainColumn& b);
/// 28 lines in R^14 at angle 1/5.
LineSet tremain_28();
/// Basis used for the 28-line check: every other column starting from the
/// first (1-based 1, 3, ..., 27). The columns 2, 4, ..., 28 have rank 13.
std::span<const std::size_t> tremain_basis_one_based();

}  // namespace eqlines
