#include "eqlines/matrix.hpp"

#include "eqlines/errors.hpp"

#include <utility>

namespace eqlines {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols) {
        throw DimensionMismatch("entry count does not match rows x cols");
    }
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool RatMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = i + 1; j < cols_; ++j) {
            if ((*this)(i, j) != (*this)(j, i)) return false;
        }
    }
    return true;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
}

RatMatrix RatMatrix::principal_submatrix(std::span<const std::size_t> indices) const {
    RatMatrix s(indices.size(), indices.size());
    for (std::size_t a = 0; a < indices.size(); ++a) {
        for (std::size_t b = 0; b < indices.size(); ++b) {
            s(a, b) = (*this)(indices[a], indices[b]);
        }
    }
    return s;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
    RatMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (sgn(a(i, k)) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    }
    return c;
}

RatVector operator*(const RatMatrix& a, std::span<const Rational> x) {
    if (a.cols() != x.size()) throw DimensionMismatch("matrix-vector shape mismatch");
    RatVector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) y[i] = dot(a.row(i), x);
    return y;
}

Rational dot(std::span<const Rational> x, std::span<const Rational> y) {
    if (x.size() != y.size()) throw DimensionMismatch("dot product length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

namespace {

Integer lcm_of_denominators(std::span<const Rational> values) {
    Integer l = 1;
    for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    return l;
}

// Each row multiplied by the lcm of its denominators. Rank and the solution
// set are unchanged; `scales` records the factors.
IntMatrix row_scaled(const RatMatrix& m, std::vector<Integer>* scales = nullptr) {
    IntMatrix h(m.rows(), m.cols());
    if (scales) scales->assign(m.rows(), Integer(1));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const Integer s = lcm_of_denominators(m.row(i));
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& q = m(i, j);
            mpz_divexact(h(i, j).get_mpz_t(), s.get_mpz_t(), q.get_den_mpz_t());
            h(i, j) *= q.get_num();
        }
        if (scales) (*scales)[i] = s;
    }
    return h;
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(a, j), m(b, j));
}

// Fraction-free Gauss-Jordan over the leading rows x rows block of `aug`.
// On success the leading block becomes d*I and the trailing columns hold
// d * H^{-1} * B, where [H | B] was the input. Returns false if H is singular.
bool fraction_free_gauss_jordan(IntMatrix& aug, Integer& d) {
    const std::size_t n = aug.rows;
    Integer prev = 1;
    Integer tmp;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && aug(p, k) == 0) ++p;
        if (p == n) return false;
        swap_rows(aug, p, k);
        const Integer pivot = aug(k, k);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            const Integer aik = aug(i, k);
            for (std::size_t j = k + 1; j < aug.cols; ++j) {
                mpz_mul(tmp.get_mpz_t(), pivot.get_mpz_t(), aug(i, j).get_mpz_t());
                mpz_submul(tmp.get_mpz_t(), aik.get_mpz_t(), aug(k, j).get_mpz_t());
                mpz_divexact(aug(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            }
            aug(i, k) = 0;
            if (i < k) aug(i, i) = pivot;
        }
        prev = pivot;
    }
    d = prev;
    return true;
}

}  // namespace

ScaledMatrix scale_to_integers(const RatMatrix& m) {
    ScaledMatrix out;
    out.denominator = lcm_of_denominators(m.entries());
    out.numerators = IntMatrix(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& q = m(i, j);
            Integer& e = out.numerators(i, j);
            mpz_divexact(e.get_mpz_t(), out.denominator.get_mpz_t(), q.get_den_mpz_t());
            e *= q.get_num();
        }
    }
    return out;
}

ScaledMatrix integer_inverse(const IntMatrix& h) {
    if (h.rows != h.cols) throw DimensionMismatch("inverse of a non-square matrix");
    const std::size_t n = h.rows;
    IntMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = h(i, j);
        aug(i, n + i) = 1;
    }
    Integer d;
    if (!fraction_free_gauss_jordan(aug, d)) throw SingularMatrix("matrix is singular");
    ScaledMatrix out;
    out.numerators = IntMatrix(n, n);
    const int sign = sgn(d);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out.numerators(i, j) = sign < 0 ? Integer(-aug(i, n + j)) : aug(i, n + j);
        }
    }
    out.denominator = abs(d);
    return out;
}

ScaledMatrix scaled_inverse(const RatMatrix& a) {
    if (!a.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
    std::vector<Integer> scales;
    const IntMatrix h = row_scaled(a, &scales);
    // a = S^{-1} h, so a^{-1} = h^{-1} S: scale column j by s_j.
    ScaledMatrix inv = integer_inverse(h);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) inv.numerators(i, j) *= scales[j];
    }
    return inv;
}

RatMatrix inverse(const RatMatrix& a) {
    const ScaledMatrix inv = scaled_inverse(a);
    RatMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            Rational q(inv.numerators(i, j), inv.denominator);
            q.canonicalize();
            out(i, j) = std::move(q);
        }
    }
    return out;
}

RatVector solve(const RatMatrix& a, std::span<const Rational> b) {
    if (!a.is_square()) throw DimensionMismatch("solve needs a square matrix");
    if (b.size() != a.rows()) throw DimensionMismatch("right-hand side length mismatch");
    const std::size_t n = a.rows();
    IntMatrix aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        Integer s = lcm_of_denominators(a.row(i));
        mpz_lcm(s.get_mpz_t(), s.get_mpz_t(), b[i].get_den_mpz_t());
        for (std::size_t j = 0; j <= n; ++j) {
            const Rational& q = j < n ? a(i, j) : b[i];
            mpz_divexact(aug(i, j).get_mpz_t(), s.get_mpz_t(), q.get_den_mpz_t());
            aug(i, j) *= q.get_num();
        }
    }
    Integer d;
    if (!fraction_free_gauss_jordan(aug, d)) throw SingularMatrix("matrix is singular");
    RatVector x(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = Rational(aug(i, n), d);
        x[i].canonicalize();
    }
    return x;
}

std::size_t rank(const RatMatrix& m) {
    IntMatrix h = row_scaled(m);
    Integer prev = 1;
    Integer tmp;
    std::size_t r = 0;
    for (std::size_t col = 0; col < h.cols && r < h.rows; ++col) {
        std::size_t p = r;
        while (p < h.rows && h(p, col) == 0) ++p;
        if (p == h.rows) continue;
        swap_rows(h, p, r);
        for (std::size_t i = r + 1; i < h.rows; ++i) {
            for (std::size_t j = col + 1; j < h.cols; ++j) {
                mpz_mul(tmp.get_mpz_t(), h(r, col).get_mpz_t(), h(i, j).get_mpz_t());
                mpz_submul(tmp.get_mpz_t(), h(i, col).get_mpz_t(), h(r, j).get_mpz_t());
                mpz_divexact(h(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            }
            h(i, col) = 0;
        }
        prev = h(r, col);
        ++r;
    }
    return r;
}

Rational determinant(const RatMatrix& m) {
    if (!m.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    std::vector<Integer> scales;
    IntMatrix h = row_scaled(m, &scales);
    Integer prev = 1;
    Integer tmp;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && h(p, k) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            swap_rows(h, p, k);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_mul(tmp.get_mpz_t(), h(k, k).get_mpz_t(), h(i, j).get_mpz_t());
                mpz_submul(tmp.get_mpz_t(), h(i, k).get_mpz_t(), h(k, j).get_mpz_t());
                mpz_divexact(h(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            }
            h(i, k) = 0;
        }
        prev = h(k, k);
    }
    Integer scale = 1;
    for (const auto& s : scales) scale *= s;
    Rational det(sign * prev, scale);
    det.canonicalize();
    return det;
}

bool is_psd(const RatMatrix& m) {
    if (!m.is_symmetric()) throw NotSymmetric("PSD test needs a symmetric matrix");
    const std::size_t n = m.rows();
    // A common positive scale keeps symmetry, so the fraction-free update
    // below is Bareiss elimination on a symmetric permutation of h. Every
    // pivot taken is positive, so each Bareiss diagonal has the sign of the
    // corresponding Schur complement diagonal.
    IntMatrix h = scale_to_integers(m).numerators;
    std::vector<bool> active(n, true);
    Integer prev = 1;
    Integer tmp;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pivot = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (!active[i]) continue;
            const int s = sgn(h(i, i));
            if (s < 0) return false;
            if (s > 0 && pivot == n) pivot = i;
        }
        if (pivot == n) {
            // Zero diagonal on the remaining block: PSD only if the block is zero.
            for (std::size_t i = 0; i < n; ++i) {
                if (!active[i]) continue;
                for (std::size_t j = i + 1; j < n; ++j) {
                    if (active[j] && h(i, j) != 0) return false;
                }
            }
            return true;
        }
        active[pivot] = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (!active[i]) continue;
            for (std::size_t j = i; j < n; ++j) {
                if (!active[j]) continue;
                mpz_mul(tmp.get_mpz_t(), h(pivot, pivot).get_mpz_t(), h(i, j).get_mpz_t());
                mpz_submul(tmp.get_mpz_t(), h(i, pivot).get_mpz_t(), h(pivot, j).get_mpz_t());
                mpz_divexact(h(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
                if (j != i) h(j, i) = h(i, j);
            }
        }
        prev = h(pivot, pivot);
    }
    return true;
}

std::vector<RatVector> nullspace(const RatMatrix& m) {
    RatMatrix r = m;
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
        std::size_t p = row;
        while (p < r.rows() && sgn(r(p, col)) == 0) ++p;
        if (p == r.rows()) continue;
        if (p != row) {
            for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(p, j), r(row, j));
        }
        const Rational inv = 1 / r(row, col);
        for (std::size_t j = col; j < r.cols(); ++j) r(row, j) *= inv;
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == row || sgn(r(i, col)) == 0) continue;
            const Rational f = r(i, col);
            for (std::size_t j = col; j < r.cols(); ++j) r(i, j) -= f * r(row, j);
        }
        pivot_cols.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(r.cols(), false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;
    std::vector<RatVector> basis;
    for (std::size_t free = 0; free < r.cols(); ++free) {
        if (is_pivot[free]) continue;
        RatVector v(r.cols());
        v[free] = 1;
        for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -r(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace eqlines
