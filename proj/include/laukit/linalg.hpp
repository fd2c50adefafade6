#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "laukit/scalar.hpp"

namespace laukit {

/// Dense matrix over exact scalars, row-major.
struct Mat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Scalar> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    Scalar& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    static Mat identity(std::size_t n);

    friend bool operator==(const Mat&, const Mat&) = default;

    Mat operator*(const Mat& o) const;
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
};

/// Reduced row echelon form. Elimination is exact; pivoting is deterministic:
/// columns are processed left to right and the pivot is the first row (lowest
/// index) with a nonzero entry in the current column. This fixes witnesses
/// and canonical bases across runs and platforms.
struct Echelon {
    Mat reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

Echelon rref(Mat m);

std::size_t rank(const Mat& m);

/// Determinant of a square matrix (exact, elimination with the same pivot
/// rule, sign tracked over row swaps).
Scalar determinant(Mat m);

std::optional<Mat> inverse(const Mat& m);

/// A particular solution of A x = b with free variables set to zero, or
/// nullopt when the system is inconsistent.
std::optional<std::vector<Scalar>> solve(const Mat& a, const std::vector<Scalar>& b);

/// Basis of the null space, one vector per free column in ascending column
/// order (deterministic given the pivot rule).
std::vector<std::vector<Scalar>> kernel_basis(const Mat& m);

}  // namespace laukit
