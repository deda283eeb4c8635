#include "eqlines/lineset.hpp"

#include "eqlines/errors.hpp"

#include <array>
#include <utility>

namespace eqlines {

SignMatrix::SignMatrix(std::size_t n) : n_(n), signs_(n * n, 1) {
    for (std::size_t i = 0; i < n; ++i) signs_[i * n + i] = 0;
}

SignMatrix::SignMatrix(std::size_t n, std::vector<std::int8_t> signs)
    : n_(n), signs_(std::move(signs)) {
    if (signs_.size() != n * n) throw Error("sign matrix entry count does not match n x n");
    for (std::size_t i = 0; i < n; ++i) {
        if ((*this)(i, i) != 0) throw Error("sign matrix diagonal must be zero");
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto s = (*this)(i, j);
            if (s != 1 && s != -1) throw Error("sign matrix off-diagonal entries must be +-1");
            if (s != (*this)(j, i)) throw Error("sign matrix must be symmetric");
        }
    }
}

void SignMatrix::set(std::size_t i, std::size_t j, std::int8_t sign) {
    if (i == j || (sign != 1 && sign != -1)) throw Error("invalid sign matrix assignment");
    signs_[i * n_ + j] = sign;
    signs_[j * n_ + i] = sign;
}

LineSet::LineSet(Rational angle, RatMatrix gram, std::optional<IntegerFrame> frame)
    : angle_(std::move(angle)), gram_(std::move(gram)), frame_(std::move(frame)) {
    if (!gram_.is_square()) throw DimensionMismatch("Gram matrix must be square");
    if (frame_ && frame_->vectors.size() != gram_.rows()) {
        throw DimensionMismatch("frame vector count does not match the Gram size");
    }
    rank_ = eqlines::rank(gram_);
}

bool LineSet::is_equiangular() const {
    const Rational neg = -angle_;
    for (std::size_t i = 0; i < size(); ++i) {
        if (gram_(i, i) != 1) return false;
        for (std::size_t j = 0; j < size(); ++j) {
            if (i != j && gram_(i, j) != angle_ && gram_(i, j) != neg) return false;
        }
    }
    return true;
}

SignMatrix LineSet::signs() const {
    if (!is_equiangular()) throw Error("line set is not equiangular; no sign matrix");
    SignMatrix s(size());
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = i + 1; j < size(); ++j) {
            s.set(i, j, gram_(i, j) == angle_ ? 1 : -1);
        }
    }
    return s;
}

bool ValidationReport::passed() const {
    for (const auto& c : checks) {
        if (!c.passed) return false;
    }
    return true;
}

ValidationReport validate(const LineSet& lines) {
    ValidationReport report;
    report.rank = lines.rank();
    const auto& g = lines.gram();
    const std::size_t n = lines.size();
    const Rational& a = lines.angle();

    ValidationCheck angle{"angle in (0,1)", a > 0 && a < 1, std::nullopt};

    ValidationCheck symmetry{"symmetric", true, std::nullopt};
    ValidationCheck diagonal{"unit diagonal", true, std::nullopt};
    ValidationCheck off_diagonal{"off-diagonal entries are +-angle", true, std::nullopt};
    const Rational neg = -a;
    for (std::size_t i = 0; i < n; ++i) {
        if (diagonal.passed && g(i, i) != 1) {
            diagonal.passed = false;
            diagonal.first_offense = {i, i};
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (symmetry.passed && g(i, j) != g(j, i)) {
                symmetry.passed = false;
                symmetry.first_offense = {i, j};
            }
            if (off_diagonal.passed && g(i, j) != a && g(i, j) != neg) {
                off_diagonal.passed = false;
                off_diagonal.first_offense = {i, j};
            }
        }
    }

    ValidationCheck psd{"positive semidefinite", false, std::nullopt};
    if (symmetry.passed) psd.passed = is_psd(g);

    ValidationCheck rank_check{"rank consistent", rank(g) == lines.rank() && lines.rank() <= n,
                               std::nullopt};

    report.checks = {angle, symmetry, diagonal, off_diagonal, psd, rank_check};
    return report;
}

LineSet from_sign_matrix(const SignMatrix& signs, const Rational& angle) {
    const std::size_t n = signs.size();
    RatMatrix gram(n, n);
    const Rational neg = -angle;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto s = signs(i, j);
            gram(i, j) = s == 0 ? Rational(1) : (s > 0 ? angle : neg);
        }
    }
    return LineSet(angle, std::move(gram));
}

bool relative_bound_applies(std::size_t r, const Rational& angle) {
    return Rational(r) * angle * angle < 1;
}

Rational relative_bound(std::size_t r, const Rational& angle) {
    if (!relative_bound_applies(r, angle)) {
        throw HypothesisViolated("relative bound needs r < 1/angle^2");
    }
    const Rational a2 = angle * angle;
    Rational value = Rational(r) * (1 - a2) / (1 - Rational(r) * a2);
    value.canonicalize();
    return value;
}

Integer relative_bound_floor(std::size_t r, const Rational& angle) {
    const Rational value = relative_bound(r, angle);
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return f;
}

namespace {

struct KnownRange {
    std::size_t first;
    std::size_t last;
    std::size_t lower;
    std::size_t upper;
};

// Maximum cardinalities of equiangular lines for small dimensions.
constexpr std::array<KnownRange, 17> kKnownRanges{{
    {2, 2, 3, 3},
    {3, 4, 6, 6},
    {5, 5, 10, 10},
    {6, 6, 16, 16},
    {7, 13, 28, 28},
    {14, 14, 28, 29},
    {15, 15, 36, 36},
    {16, 16, 40, 41},
    {17, 17, 48, 49},
    {18, 18, 56, 60},
    {19, 19, 72, 75},
    {20, 20, 90, 95},
    {21, 21, 126, 126},
    {22, 22, 176, 176},
    {23, 41, 276, 276},
    {42, 42, 276, 288},
    {43, 43, 344, 344},
}};

}  // namespace

BoundsEntry known_bounds(std::size_t d) {
    for (const auto& r : kKnownRanges) {
        if (d >= r.first && d <= r.last) return {d, r.lower, r.upper};
    }
    throw OutOfRange("known bounds cover dimensions 2..43 only");
}

}  // namespace eqlines
