#include "laukit/linalg.hpp"

#include <algorithm>
#include <utility>

#include "laukit/error.hpp"

namespace laukit {

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one();
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols != o.rows) throw Error("matrix shape mismatch in product");
    Mat out(rows, o.cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < cols; ++k) {
            const Scalar& x = at(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols; ++j) out.at(i, j) += x * o.at(k, j);
        }
    return out;
}

std::vector<Scalar> Mat::apply(const std::vector<Scalar>& v) const {
    if (v.size() != cols) throw Error("matrix shape mismatch in apply");
    std::vector<Scalar> out(rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            const Scalar& m = at(i, j);
            if (m.is_zero()) continue;
            if (m.is_one())
                out[i] += v[j];
            else
                out[i] += m * v[j];
        }
    return out;
}

Echelon rref(Mat m) {
    Echelon e;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols && pivot_row < m.rows; ++col) {
        std::size_t sel = pivot_row;
        while (sel < m.rows && m.at(sel, col).is_zero()) ++sel;
        if (sel == m.rows) continue;
        if (sel != pivot_row)
            for (std::size_t j = 0; j < m.cols; ++j)
                std::swap(m.at(sel, j), m.at(pivot_row, j));
        Scalar inv = Scalar::one() / m.at(pivot_row, col);
        for (std::size_t j = col; j < m.cols; ++j) m.at(pivot_row, j) *= inv;
        for (std::size_t r = 0; r < m.rows; ++r) {
            if (r == pivot_row || m.at(r, col).is_zero()) continue;
            Scalar f = m.at(r, col);
            for (std::size_t j = col; j < m.cols; ++j)
                m.at(r, j) -= f * m.at(pivot_row, j);
        }
        e.pivot_cols.push_back(col);
        ++pivot_row;
    }
    e.rank = pivot_row;
    e.reduced = std::move(m);
    return e;
}

std::size_t rank(const Mat& m) {
    return rref(m).rank;
}

Scalar determinant(Mat m) {
    if (m.rows != m.cols) throw Error("determinant of a non-square matrix");
    const std::size_t n = m.rows;
    bool negate = false;
    Scalar det = Scalar::one();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && m.at(sel, col).is_zero()) ++sel;
        if (sel == n) return Scalar::zero();
        if (sel != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(sel, j), m.at(col, j));
            negate = !negate;
        }
        const Scalar& p = m.at(col, col);
        det *= p;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m.at(r, col).is_zero()) continue;
            Scalar f = m.at(r, col) / p;
            for (std::size_t j = col; j < n; ++j) m.at(r, j) -= f * m.at(col, j);
        }
    }
    return negate ? -det : det;
}

std::optional<Mat> inverse(const Mat& m) {
    if (m.rows != m.cols) throw Error("inverse of a non-square matrix");
    const std::size_t n = m.rows;
    Mat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Scalar::one();
    }
    Echelon e = rref(std::move(aug));
    // m is invertible iff every pivot of [m | I] lands in the left block.
    if (e.rank < n) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i)
        if (e.pivot_cols[i] != i) return std::nullopt;
    Mat out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = e.reduced.at(i, n + j);
    return out;
}

std::optional<std::vector<Scalar>> solve(const Mat& a, const std::vector<Scalar>& b) {
    if (b.size() != a.rows) throw Error("matrix shape mismatch in solve");
    Mat aug(a.rows, a.cols + 1);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols) = b[i];
    }
    Echelon e = rref(std::move(aug));
    // Inconsistent iff some pivot lands in the augmented column.
    for (std::size_t c : e.pivot_cols)
        if (c == a.cols) return std::nullopt;
    std::vector<Scalar> x(a.cols);
    for (std::size_t t = 0; t < e.pivot_cols.size(); ++t)
        x[e.pivot_cols[t]] = e.reduced.at(t, a.cols);
    return x;
}

std::vector<std::vector<Scalar>> kernel_basis(const Mat& m) {
    Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(m.cols);
        v[free] = Scalar::one();
        for (std::size_t t = 0; t < e.pivot_cols.size(); ++t)
            v[e.pivot_cols[t]] = -e.reduced.at(t, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace laukit
