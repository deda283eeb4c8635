#pragma once

#include "eqlines/matrix.hpp"
#include "eqlines/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace eqlines {

/// Integer representatives of the lines, all of the same squared norm, so
/// that gram(i, j) = <v_i, v_j> / squared_norm. Present only for sets built
/// from integer vectors (the octad families).
struct IntegerFrame {
    std::vector<std::vector<std::int64_t>> vectors;
    std::int64_t squared_norm = 1;

    friend bool operator==(const IntegerFrame&, const IntegerFrame&) = default;
};

/// Symmetric sign pattern with zero diagonal and +-1 elsewhere. Together
/// with an angle a it determines the Gram matrix I + a * S.
class SignMatrix {
public:
    SignMatrix() = default;
    explicit SignMatrix(std::size_t n);
    /// Throws Error if `signs` breaks the invariants.
    SignMatrix(std::size_t n, std::vector<std::int8_t> signs);

    std::size_t size() const noexcept { return n_; }
    std::int8_t operator()(std::size_t i, std::size_t j) const { return signs_[i * n_ + j]; }
    /// Sets both (i, j) and (j, i).
    void set(std::size_t i, std::size_t j, std::int8_t sign);

    friend bool operator==(const SignMatrix&, const SignMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::int8_t> signs_;
};

/// A set of lines given by the Gram matrix of unit representatives and the
/// common angle. The constructor does not enforce equiangularity; call
/// validate() for that.
class LineSet {
public:
    LineSet() = default;
    LineSet(Rational angle, RatMatrix gram, std::optional<IntegerFrame> frame = std::nullopt);

    std::size_t size() const noexcept { return gram_.rows(); }
    const Rational& angle() const noexcept { return angle_; }
    const RatMatrix& gram() const noexcept { return gram_; }
    std::size_t rank() const noexcept { return rank_; }
    const std::optional<IntegerFrame>& frame() const noexcept { return frame_; }

    /// True iff the Gram has unit diagonal and every off-diagonal entry is +-angle.
    bool is_equiangular() const;
    /// Sign pattern of an equiangular Gram. Throws Error otherwise.
    SignMatrix signs() const;

    friend bool operator==(const LineSet&, const LineSet&) = default;

private:
    Rational angle_;
    RatMatrix gram_;
    std::size_t rank_ = 0;
    std::optional<IntegerFrame> frame_;
};

struct ValidationCheck {
    std::string name;
    bool passed = true;
    /// First offending (row, column), 0-based, when the check is entry-wise.
    std::optional<std::pair<std::size_t, std::size_t>> first_offense;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    std::size_t rank = 0;

    bool passed() const;
};

ValidationReport validate(const LineSet& lines);

/// Gram = I + angle * signs. Rank is computed; equiangularity is not checked.
LineSet from_sign_matrix(const SignMatrix& signs, const Rational& angle);

/// r (1 - a^2) / (1 - r a^2), valid for r < 1/a^2; throws HypothesisViolated otherwise.
Rational relative_bound(std::size_t r, const Rational& angle);
/// floor(relative_bound(r, angle)): the integer bound on the number of lines.
Integer relative_bound_floor(std::size_t r, const Rational& angle);
/// Whether r < 1/a^2, i.e. whether relative_bound applies.
bool relative_bound_applies(std::size_t r, const Rational& angle);

/// Known range for the maximum number of equiangular lines in dimension d.
struct BoundsEntry {
    std::size_t dimension = 0;
    std::size_t lower = 0;
    std::size_t upper = 0;
};

/// Compiled-in table for 2 <= d <= 43. Throws OutOfRange elsewhere.
BoundsEntry known_bounds(std::size_t d);

}  // namespace eqlines
