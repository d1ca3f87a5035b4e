#include "bbs/qmatrix.hpp"

#include <stdexcept>

namespace bbs {

std::vector<int> QMatrix::rref() {
    std::vector<int> pivots;
    int prow = 0;
    for (int col = 0; col < c_ && prow < r_; ++col) {
        int sel = -1;
        for (int i = prow; i < r_; ++i)
            if (a_[i][col] != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(a_[prow], a_[sel]);
        Rational inv = 1 / a_[prow][col];
        for (int j = col; j < c_; ++j) a_[prow][j] *= inv;
        for (int i = 0; i < r_; ++i) {
            if (i == prow || a_[i][col] == 0) continue;
            Rational f = a_[i][col];
            for (int j = col; j < c_; ++j) a_[i][j] -= f * a_[prow][j];
        }
        pivots.push_back(col);
        ++prow;
    }
    return pivots;
}

namespace {

// Bareiss elimination on an integer copy; returns (rank, det-of-leading-minor
// numerator trail). Only the pieces needed by rank()/det() are exposed.
struct BareissResult {
    int rank;
    mpz_class det; // valid when the matrix is square and rank == n
    bool swapped_sign;
};

BareissResult bareiss(const std::vector<std::vector<Rational>>& q, int r, int c) {
    // Clear denominators row by row; this scales det by a known factor, which
    // callers undo. For rank the scaling is irrelevant.
    std::vector<std::vector<mpz_class>> a(r, std::vector<mpz_class>(c));
    for (int i = 0; i < r; ++i) {
        mpz_class l = 1;
        for (int j = 0; j < c; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q[i][j].get_den().get_mpz_t());
        for (int j = 0; j < c; ++j) {
            mpq_class scaled = q[i][j] * Rational(l);
            a[i][j] = scaled.get_num();
        }
    }
    mpz_class prev = 1;
    bool sign = false;
    int prow = 0;
    for (int col = 0; col < c && prow < r; ++col) {
        int sel = -1;
        for (int i = prow; i < r; ++i)
            if (a[i][col] != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        if (sel != prow) {
            std::swap(a[sel], a[prow]);
            sign = !sign;
        }
        for (int i = prow + 1; i < r; ++i) {
            for (int j = col + 1; j < c; ++j) {
                a[i][j] = (a[prow][col] * a[i][j] - a[i][col] * a[prow][j]) / prev;
            }
            a[i][col] = 0;
        }
        prev = a[prow][col];
        ++prow;
    }
    return {prow, prev, sign};
}

} // namespace

int QMatrix::rank() const {
    if (r_ == 0 || c_ == 0) return 0;
    return bareiss(a_, r_, c_).rank;
}

Rational QMatrix::det() const {
    if (r_ != c_) throw std::invalid_argument("determinant of non-square matrix");
    if (r_ == 0) return 1;
    // Track the denominator clearing factor.
    Rational scale = 1;
    for (int i = 0; i < r_; ++i) {
        mpz_class l = 1;
        for (int j = 0; j < c_; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a_[i][j].get_den().get_mpz_t());
        scale *= Rational(l);
    }
    auto res = bareiss(a_, r_, c_);
    if (res.rank < r_) return 0;
    Rational d(res.det);
    if (res.swapped_sign) d = -d;
    return d / scale;
}

std::optional<QMatrix> QMatrix::inverse() const {
    if (r_ != c_) throw std::invalid_argument("inverse of non-square matrix");
    QMatrix aug(r_, 2 * c_);
    for (int i = 0; i < r_; ++i) {
        for (int j = 0; j < c_; ++j) aug.at(i, j) = a_[i][j];
        aug.at(i, c_ + i) = 1;
    }
    auto piv = aug.rref();
    if (static_cast<int>(piv.size()) != r_ || (r_ > 0 && piv.back() >= c_)) return std::nullopt;
    for (int k = 0; k < r_; ++k)
        if (piv[k] != k) return std::nullopt;
    QMatrix inv(r_, c_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) inv.at(i, j) = aug.at(i, c_ + j);
    return inv;
}

std::vector<std::vector<Rational>> QMatrix::kernel() const {
    QMatrix m = *this;
    auto piv = m.rref();
    std::vector<bool> is_piv(c_, false);
    for (int p : piv) is_piv[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < c_; ++free) {
        if (is_piv[free]) continue;
        std::vector<Rational> v(c_, 0);
        v[free] = 1;
        for (size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -m.at(static_cast<int>(k), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (c_ != o.r_) throw std::invalid_argument("matrix product shape mismatch");
    QMatrix out(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            if (a_[i][k] == 0) continue;
            for (int j = 0; j < o.c_; ++j)
                if (o.a_[k][j] != 0) out.a_[i][j] += a_[i][k] * o.a_[k][j];
        }
    return out;
}

QMatrix QMatrix::select_columns(const std::vector<int>& cols) const {
    QMatrix out(r_, static_cast<int>(cols.size()));
    for (int i = 0; i < r_; ++i)
        for (size_t j = 0; j < cols.size(); ++j) out.at(i, static_cast<int>(j)) = a_[i][cols[j]];
    return out;
}

} // namespace bbs
