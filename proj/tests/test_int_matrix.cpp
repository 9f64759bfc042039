#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <random>

#include "qsg/int_matrix.hpp"

using namespace qsg;
using boost::multiprecision::abs;
using boost::multiprecision::gcd;

namespace {

BigInt entry_gcd(const IntMatrix& m) {
    BigInt g = 0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            g = gcd(g, m(i, j));
    return g;
}

void check_snf_identities(const IntMatrix& m) {
    SnfResult s = snf(m);
    CHECK(s.p * s.d * s.q == m);
    CHECK(abs(determinant(s.p)) == 1);
    CHECK(abs(determinant(s.q)) == 1);
    CHECK(s.p * s.p_inv == IntMatrix::identity(m.rows()));
    CHECK(s.q * s.q_inv == IntMatrix::identity(m.cols()));
    CHECK(s.rank == rank(m));
    CHECK(s.rank == static_cast<int>(s.divisors.size()));
    for (std::size_t i = 0; i < s.divisors.size(); ++i) {
        CHECK(s.divisors[i] > 0);
        if (i > 0)
            CHECK(s.divisors[i] % s.divisors[i - 1] == 0);
    }
    // diagonal beyond the rank is zero, off-diagonal everywhere
    for (int i = 0; i < s.d.rows(); ++i)
        for (int j = 0; j < s.d.cols(); ++j)
            if (i != j || i >= s.rank)
                CHECK(s.d(i, j) == 0);
    if (!s.divisors.empty())
        CHECK(s.divisors.front() == entry_gcd(m));
    if (m.rows() == m.cols()) {
        BigInt product = 1;
        for (const BigInt& d : s.divisors)
            product *= d;
        if (s.rank < m.rows())
            product = 0;
        CHECK(abs(determinant(m)) == product);
    }
}

}  // namespace

TEST_CASE("snf of the identity") {
    SnfResult s = snf(IntMatrix::identity(3));
    CHECK(s.divisors == std::vector<BigInt>{1, 1, 1});
    CHECK(s.rank == 3);
    CHECK(s.d == IntMatrix::identity(3));
}

TEST_CASE("snf of diag(2,3)") {
    // gcd of entries forces d1 = 1; |det| = 6 forces d1*d2 = 6
    IntMatrix m = IntMatrix::from_rows({{2, 0}, {0, 3}});
    SnfResult s = snf(m);
    CHECK(s.divisors == std::vector<BigInt>{1, 6});
    check_snf_identities(m);
}

TEST_CASE("snf of a rank-deficient matrix") {
    // gcd = 2 and det = 0
    IntMatrix m = IntMatrix::from_rows({{2, 4}, {4, 8}});
    SnfResult s = snf(m);
    CHECK(s.divisors == std::vector<BigInt>{2});
    CHECK(s.rank == 1);
    check_snf_identities(m);
}

TEST_CASE("snf handles empty shapes") {
    for (auto [r, c] : {std::pair{0, 4}, {4, 0}, {0, 0}}) {
        SnfResult s = snf(IntMatrix(r, c));
        CHECK(s.rank == 0);
        CHECK(s.divisors.empty());
        CHECK(s.q == IntMatrix::identity(c));
    }
    CHECK(rank(IntMatrix(0, 5)) == 0);
}

TEST_CASE("snf is deterministic") {
    IntMatrix m = IntMatrix::from_rows({{6, 4, -2}, {2, 8, 5}, {0, -3, 7}});
    SnfResult a = snf(m);
    SnfResult b = snf(m);
    CHECK(a.p == b.p);
    CHECK(a.q == b.q);
    CHECK(a.d == b.d);
}

TEST_CASE("snf identities on random matrices") {
    std::mt19937 rng(101);
    std::uniform_int_distribution<int> dim(0, 8);
    std::uniform_int_distribution<int> entry(-5, 5);
    for (int trial = 0; trial < 200; ++trial) {
        IntMatrix m(dim(rng), dim(rng));
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                m(i, j) = entry(rng);
        check_snf_identities(m);
    }
}

TEST_CASE("rank") {
    CHECK(rank(IntMatrix(3, 3)) == 0);
    CHECK(rank(IntMatrix::identity(4)) == 4);
    CHECK(rank(IntMatrix::from_rows({{1, 2}, {2, 4}})) == 1);
    CHECK(rank(IntMatrix::from_rows({{1, -1, 1}})) == 1);
}

TEST_CASE("determinant") {
    CHECK(determinant(IntMatrix::identity(5)) == 1);
    CHECK(determinant(IntMatrix::from_rows({{0, 1}, {1, 0}})) == -1);
    CHECK(determinant(IntMatrix::from_rows({{2, 4}, {4, 8}})) == 0);
    CHECK(determinant(IntMatrix::from_rows({{3, 1, 0}, {0, 2, 1}, {1, 0, 4}})) == 25);
    CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), DimensionMismatch);
}

TEST_CASE("unimodular_inverse") {
    CHECK(unimodular_inverse(IntMatrix::identity(3)) == IntMatrix::identity(3));

    IntMatrix shear = IntMatrix::from_rows({{1, 1}, {0, 1}});
    CHECK(unimodular_inverse(shear) == IntMatrix::from_rows({{1, -1}, {0, 1}}));

    SnfResult s = snf(IntMatrix::from_rows({{2, 0}, {0, 3}}));
    IntMatrix q_inverse = unimodular_inverse(s.q);
    CHECK(s.q * q_inverse == IntMatrix::identity(2));

    CHECK_THROWS_AS(unimodular_inverse(IntMatrix::from_rows({{2, 0}, {0, 1}})), NotUnimodular);
    CHECK_THROWS_AS(unimodular_inverse(IntMatrix::from_rows({{1, 2}, {2, 4}})), NotUnimodular);
    CHECK_THROWS_AS(unimodular_inverse(IntMatrix(2, 3)), NotUnimodular);
}

TEST_CASE("unimodular_inverse on random products of shears") {
    std::mt19937 rng(55);
    std::uniform_int_distribution<int> entry(-3, 3);
    std::uniform_int_distribution<int> idx(0, 3);
    for (int trial = 0; trial < 50; ++trial) {
        IntMatrix m = IntMatrix::identity(4);
        for (int ops = 0; ops < 12; ++ops) {
            int i = idx(rng), j = idx(rng);
            if (i != j)
                m.add_row(i, j, entry(rng));
        }
        IntMatrix inv = unimodular_inverse(m);
        CHECK(m * inv == IntMatrix::identity(4));
        CHECK(inv * m == IntMatrix::identity(4));
    }
}
