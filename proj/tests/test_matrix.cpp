#include "eqlines/errors.hpp"
#include "eqlines/matrix.hpp"

#include <doctest.h>

#include <Eigen/Dense>

#include <random>

using namespace eqlines;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

RatMatrix from_rows(std::initializer_list<std::initializer_list<Rational>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = rows.begin()->size();
    std::vector<Rational> e;
    for (const auto& row : rows) e.insert(e.end(), row.begin(), row.end());
    return RatMatrix(r, c, std::move(e));
}

RatMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int range = 5) {
    std::uniform_int_distribution<int> num(-range, range);
    std::uniform_int_distribution<int> den(1, 4);
    RatMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) m(i, j) = q(num(rng), den(rng));
    }
    return m;
}

Eigen::MatrixXd to_eigen(const RatMatrix& m) {
    Eigen::MatrixXd e(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j).get_d();
    }
    return e;
}

bool canonical(const Rational& x) {
    Rational y = x;
    y.canonicalize();
    return y.get_num() == x.get_num() && y.get_den() == x.get_den() && sgn(x.get_den()) > 0;
}

}  // namespace

TEST_CASE("parse_rational accepts p/q and p only") {
    CHECK(parse_rational("1/5") == q(1, 5));
    CHECK(parse_rational("-2/10") == q(-1, 5));
    CHECK(parse_rational("7") == q(7));
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK_THROWS_AS(parse_rational("0.2"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1/-5"), ParseError);
}

TEST_CASE("rank of simple matrices") {
    CHECK(rank(RatMatrix::identity(5)) == 5);
    RatMatrix ones(4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) ones(i, j) = 1;
    }
    CHECK(rank(ones) == 1);
    CHECK(rank(RatMatrix(3, 3)) == 0);
    CHECK(rank(from_rows({{1, 2, 3}, {2, 4, 6}})) == 1);
    CHECK(rank(from_rows({{0, 1}, {1, 0}, {1, 1}})) == 2);
}

TEST_CASE("solve on hand-worked 2x2 systems") {
    const RatMatrix a = from_rows({{1, q(1, 2)}, {q(1, 2), 1}});
    CHECK(solve(RatMatrix::identity(2), RatVector{q(1, 5), q(-1, 5)}) == RatVector{q(1, 5), q(-1, 5)});
    CHECK(solve(a, RatVector{q(1, 2), q(-1, 2)}) == RatVector{1, -1});
    CHECK(solve(a, RatVector{q(1, 2), q(1, 2)}) == RatVector{q(1, 3), q(1, 3)});
    CHECK_THROWS_AS(solve(from_rows({{1, 2}, {2, 4}}), RatVector{1, 1}), SingularMatrix);
    CHECK_THROWS_AS(solve(a, RatVector{1}), DimensionMismatch);
}

TEST_CASE("inverse on small matrices") {
    CHECK(inverse(RatMatrix::identity(3)) == RatMatrix::identity(3));
    const RatMatrix a = from_rows({{1, q(1, 2)}, {q(1, 2), 1}});
    CHECK(inverse(a) == from_rows({{q(4, 3), q(-2, 3)}, {q(-2, 3), q(4, 3)}}));
    CHECK(inverse(from_rows({{2, 0}, {0, 4}})) == from_rows({{q(1, 2), 0}, {0, q(1, 4)}}));
    CHECK_THROWS_AS(inverse(from_rows({{1, 1}, {1, 1}})), SingularMatrix);

    const ScaledMatrix s = scaled_inverse(a);
    CHECK(sgn(s.denominator) > 0);
    CHECK(Rational(s.numerators(0, 0), s.denominator) == q(4, 3));
}

TEST_CASE("determinant") {
    CHECK(determinant(from_rows({{1, 2}, {2, 1}})) == -3);
    CHECK(determinant(from_rows({{0, 1}, {1, 0}})) == -1);
    CHECK(determinant(from_rows({{q(1, 2), 0}, {0, q(2, 3)}})) == q(1, 3));
    CHECK(determinant(from_rows({{1, 2}, {2, 4}})) == 0);
}

TEST_CASE("is_psd on small matrices") {
    CHECK(is_psd(RatMatrix::identity(4)));
    CHECK_FALSE(is_psd(from_rows({{1, 2}, {2, 1}})));
    CHECK(is_psd(from_rows({{1, 1}, {1, 1}})));
    CHECK(is_psd(RatMatrix(3, 3)));
    CHECK_FALSE(is_psd(from_rows({{0, 1}, {1, 0}})));
    CHECK_FALSE(is_psd(from_rows({{1, 0}, {0, -1}})));
    CHECK_THROWS_AS(is_psd(from_rows({{1, 2}, {3, 1}})), NotSymmetric);
}

TEST_CASE("property: a * solve(a, b) = b and a * inverse(a) = I") {
    std::mt19937 rng(7);
    int nonsingular = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + trial % 7;
        const RatMatrix a = random_matrix(rng, n, n);
        const RatMatrix b = random_matrix(rng, n, 1);
        RatVector bv(b.entries().begin(), b.entries().end());
        if (rank(a) < n) {
            CHECK_THROWS_AS(inverse(a), SingularMatrix);
            continue;
        }
        ++nonsingular;
        CHECK(a * RatVector(solve(a, bv)) == bv);
        CHECK(a * inverse(a) == RatMatrix::identity(n));
        CHECK(determinant(a) * determinant(inverse(a)) == 1);
        const RatMatrix inv = inverse(a);
        for (const auto& x : inv.entries()) CHECK(canonical(x));
    }
    CHECK(nonsingular > 40);
}

TEST_CASE("property: rank(m) = rank(m^T) = rank(m^T m) and agrees with floating point") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t r = 1 + trial % 6;
        const std::size_t k = 1 + (trial / 6) % 5;
        // m = x * y has rank at most min(r, k, c)
        const RatMatrix m = random_matrix(rng, r, k, 3) * random_matrix(rng, k, 6, 3);
        const std::size_t rk = rank(m);
        CHECK(rk == rank(m.transpose()));
        CHECK(rk == rank(m.transpose() * m));
        Eigen::FullPivLU<Eigen::MatrixXd> lu(to_eigen(m));
        lu.setThreshold(1e-9);
        CHECK(rk == static_cast<std::size_t>(lu.rank()));
    }
}

TEST_CASE("property: is_psd agrees with an eigenvalue oracle") {
    std::mt19937 rng(3);
    int psd = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + trial % 12;
        RatMatrix m(n, n);
        if (trial % 2 == 0) {
            // Gram of random vectors, sometimes rank deficient, perturbed on the diagonal.
            const RatMatrix x = random_matrix(rng, 1 + trial % 5, n, 3);
            m = x.transpose() * x;
            std::uniform_int_distribution<int> shift(-1, 1);
            for (std::size_t i = 0; i < n; ++i) m(i, i) += q(shift(rng), 8);
        } else {
            const RatMatrix x = random_matrix(rng, n, n, 3);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = x(i, j);
            }
            m(0, 0) += 6;
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_eigen(m));
        const double min_eig = es.eigenvalues().minCoeff();
        const bool exact = is_psd(m);
        if (min_eig > 1e-9) {
            CHECK(exact);
        } else if (min_eig < -1e-9) {
            CHECK_FALSE(exact);
        }
        psd += exact;
    }
    CHECK(psd > 10);
    CHECK(psd < 90);
}

TEST_CASE("nullspace") {
    const RatMatrix m = from_rows({{1, 1, 0}, {0, 1, 1}});
    const auto basis = nullspace(m);
    REQUIRE(basis.size() == 1);
    CHECK(m * RatVector(basis[0]) == RatVector{0, 0});
    CHECK(nullspace(RatMatrix::identity(3)).empty());
}
