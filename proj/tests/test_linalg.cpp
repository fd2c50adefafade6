#include "doctest.h"
#include "laukit/linalg.hpp"
#include "test_helpers.hpp"

using namespace laukit;
using testing::sc;
using testing::seeded_scalar;

namespace {

Mat seeded_matrix(std::size_t rows, std::size_t cols, std::uint64_t key) {
    Mat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = seeded_scalar(key, i * cols + j);
    return m;
}

}  // namespace

TEST_CASE("rref computes rank and canonical pivots deterministically") {
    Mat m(3, 3);
    m.at(0, 0) = sc(1); m.at(0, 1) = sc(2); m.at(0, 2) = sc(3);
    m.at(1, 0) = sc(2); m.at(1, 1) = sc(4); m.at(1, 2) = sc(6);   // 2x row 0
    m.at(2, 0) = sc(0); m.at(2, 1) = sc(1); m.at(2, 2) = sc(1);
    Echelon e = rref(m);
    CHECK(e.rank == 2);
    CHECK(e.pivot_cols == std::vector<std::size_t>{0, 1});
    // canonical reduced form
    CHECK(e.reduced.at(0, 0) == sc(1));
    CHECK(e.reduced.at(0, 1) == sc(0));
    CHECK(e.reduced.at(0, 2) == sc(1));
    CHECK(e.reduced.at(1, 2) == sc(1));
}

TEST_CASE("determinant: exact values and complex entries") {
    Mat m(2, 2);
    m.at(0, 0) = sc(1); m.at(0, 1) = sc(1);
    m.at(1, 1) = sc(1);
    CHECK(determinant(m) == sc(1));  // unitriangular

    Mat c(2, 2);
    c.at(0, 0) = sc(0, 1, 1, 1);  // i
    c.at(1, 1) = sc(0, 1, 1, 1);
    CHECK(determinant(c) == sc(-1));

    Mat swapped(2, 2);
    swapped.at(0, 1) = sc(1);
    swapped.at(1, 0) = sc(1);
    CHECK(determinant(swapped) == sc(-1));  // row swap sign
}

TEST_CASE("solve returns a particular solution exactly when consistent") {
    Mat m(2, 2);
    m.at(0, 0) = sc(1, 2); m.at(0, 1) = sc(1, 3);
    m.at(1, 0) = sc(1);    m.at(1, 1) = sc(1);
    auto x = solve(m, {sc(1), sc(2)});
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == std::vector<Scalar>{sc(1), sc(2)});

    // inconsistent: duplicate row, different rhs
    Mat bad(2, 1);
    bad.at(0, 0) = sc(1);
    bad.at(1, 0) = sc(1);
    CHECK_FALSE(solve(bad, {sc(1), sc(2)}).has_value());
}

TEST_CASE("property: inverse and kernel agree with rank on seeded matrices") {
    int invertible_seen = 0, singular_seen = 0;
    for (std::uint64_t key = 0; key < 60; ++key) {
        Mat m = seeded_matrix(3, 3, key * 7 + 1);
        std::size_t r = rank(m);
        CHECK(kernel_basis(m).size() == 3 - r);
        auto inv = inverse(m);
        if (r == 3) {
            ++invertible_seen;
            REQUIRE(inv.has_value());
            CHECK(*inv * m == Mat::identity(3));
            CHECK(m * *inv == Mat::identity(3));
            CHECK_FALSE(determinant(m).is_zero());
        } else {
            ++singular_seen;
            CHECK_FALSE(inv.has_value());
            CHECK(determinant(m).is_zero());
        }

        // force a singular variant: overwrite the last row with the first
        Mat s = m;
        for (std::size_t j = 0; j < 3; ++j) s.at(2, j) = s.at(0, j);
        CHECK(rank(s) <= 2);
        CHECK(determinant(s).is_zero());
        CHECK_FALSE(inverse(s).has_value());
        for (const auto& v : kernel_basis(s)) {
            bool all_zero = true;
            for (const Scalar& c : s.apply(v))
                if (!c.is_zero()) all_zero = false;
            CHECK(all_zero);
        }
        CHECK(kernel_basis(s).size() == 3 - rank(s));
    }
    CHECK(invertible_seen > 0);
    (void)singular_seen;  // seeded 3x3 matrices are almost always invertible
}
