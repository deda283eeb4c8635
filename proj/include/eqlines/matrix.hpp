#pragma once

#include "eqlines/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace eqlines {

/// Dense row-major matrix of exact rationals.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);
    RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool is_symmetric() const;

    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::span<const Rational> row(std::size_t i) const {
        return {entries_.data() + i * cols_, cols_};
    }
    const std::vector<Rational>& entries() const noexcept { return entries_; }

    RatMatrix transpose() const;
    /// Rows and columns restricted to `indices`, in the given order.
    RatMatrix principal_submatrix(std::span<const std::size_t> indices) const;

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatVector operator*(const RatMatrix& a, std::span<const Rational> x);

/// Dense row-major matrix of arbitrary-precision integers; the working type
/// of the fraction-free routines.
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Integer> entries;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

    Integer& operator()(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
};

/// `m` written as `numerators / denominator` with one common positive
/// denominator (the lcm of all entry denominators).
struct ScaledMatrix {
    IntMatrix numerators;
    Integer denominator;
};

ScaledMatrix scale_to_integers(const RatMatrix& m);

/// Inverse as `numerators / denominator`, computed by fraction-free
/// Gauss-Jordan. The fraction is not reduced.
ScaledMatrix scaled_inverse(const RatMatrix& a);

/// Same, for an integer matrix: returns N and d with h^{-1} = N / d.
/// Throws SingularMatrix.
ScaledMatrix integer_inverse(const IntMatrix& h);

/// Exact rank by fraction-free (Bareiss) elimination.
std::size_t rank(const RatMatrix& m);
Rational determinant(const RatMatrix& m);

/// Exact x with a*x = b. Throws SingularMatrix or DimensionMismatch.
RatVector solve(const RatMatrix& a, std::span<const Rational> b);
RatMatrix inverse(const RatMatrix& a);

/// Positive semidefiniteness by LDL^T with diagonal pivoting.
/// Throws NotSymmetric.
bool is_psd(const RatMatrix& m);

Rational dot(std::span<const Rational> x, std::span<const Rational> y);

/// Basis of {x : m x = 0}, one vector per free column of the reduced row
/// echelon form.
std::vector<RatVector> nullspace(const RatMatrix& m);

}  // namespace eqlines
