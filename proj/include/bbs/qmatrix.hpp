#pragma once

#include <optional>
#include <vector>

#include "bbs/rational.hpp"

namespace bbs {

// Dense exact-rational matrix utilities. Pivoting is deterministic: the first
// nonzero entry in column order wins. Determinants and ranks are computed by
// fraction-free (Bareiss) elimination on a denominator-cleared integer copy.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(int rows, int cols) : r_(rows), c_(cols), a_(rows, std::vector<Rational>(cols, 0)) {}
    explicit QMatrix(std::vector<std::vector<Rational>> a)
        : r_(static_cast<int>(a.size())), c_(a.empty() ? 0 : static_cast<int>(a[0].size())), a_(std::move(a)) {}

    int rows() const { return r_; }
    int cols() const { return c_; }
    Rational& at(int i, int j) { return a_[i][j]; }
    const Rational& at(int i, int j) const { return a_[i][j]; }
    const std::vector<Rational>& row(int i) const { return a_[i]; }

    // In-place reduced row echelon form; returns pivot columns.
    std::vector<int> rref();

    int rank() const;

    // Determinant of a square matrix (Bareiss on cleared integers).
    Rational det() const;

    // Inverse of a square nonsingular matrix; nullopt when singular.
    std::optional<QMatrix> inverse() const;

    // Basis of the right kernel, one vector per column of the result.
    std::vector<std::vector<Rational>> kernel() const;

    QMatrix operator*(const QMatrix& o) const;

    // Column submatrix in the given column order.
    QMatrix select_columns(const std::vector<int>& cols) const;

private:
    int r_ = 0, c_ = 0;
    std::vector<std::vector<Rational>> a_;
};

} // namespace bbs
