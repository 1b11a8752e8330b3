#include "matrix.hpp"

#include "error.hpp"

namespace sqec {

QMat QMat::identity(int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
    return m;
}

QMat QMat::from_columns(int rows, const std::vector<QVec>& cols) {
    QMat m(rows, (int)cols.size());
    for (int c = 0; c < (int)cols.size(); ++c) {
        if ((int)cols[c].size() != rows) fail(errc::shape_error, "column length mismatch");
        for (int r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
    }
    return m;
}

QVec QMat::column(int c) const {
    QVec v(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

void QMat::set_column(int c, const QVec& v) {
    for (int r = 0; r < rows_; ++r) at(r, c) = v[r];
}

QMat QMat::transpose() const {
    QMat m(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
}

QMat QMat::hstack(const QMat& o) const {
    if (rows_ != o.rows_) fail(errc::shape_error, "hstack row mismatch");
    QMat m(rows_, cols_ + o.cols_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
        for (int c = 0; c < o.cols_; ++c) m.at(r, cols_ + c) = o.at(r, c);
    }
    return m;
}

bool QMat::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool QMat::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int r = 0; r < rows_; ++r)
        for (int c = r + 1; c < cols_; ++c)
            if (at(r, c) != at(c, r)) return false;
    return true;
}

QMat operator*(const QMat& a, const QMat& b) {
    if (a.cols_ != b.rows_) fail(errc::shape_error, "matrix product shape mismatch");
    QMat m(a.rows_, b.cols_);
    for (int r = 0; r < a.rows_; ++r)
        for (int k = 0; k < a.cols_; ++k) {
            if (a.at(r, k).is_zero()) continue;
            for (int c = 0; c < b.cols_; ++c) m.at(r, c) += a.at(r, k) * b.at(k, c);
        }
    return m;
}

QVec QMat::apply(const QVec& v) const {
    if ((int)v.size() != cols_) fail(errc::shape_error, "matrix-vector shape mismatch");
    QVec out(rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out[r] += at(r, c) * v[c];
    return out;
}

GaussianRational QMat::det() const {
    if (rows_ != cols_) fail(errc::shape_error, "determinant of non-square matrix");
    QMat m = *this;
    GaussianRational d(1);
    int n = rows_;
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if (!m.at(r, c).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return GaussianRational(0);
        if (pivot != c) {
            for (int k = 0; k < n; ++k) std::swap(m.at(pivot, k), m.at(c, k));
            d = -d;
        }
        d *= m.at(c, c);
        GaussianRational inv = m.at(c, c).inverse();
        for (int r = c + 1; r < n; ++r) {
            GaussianRational f = m.at(r, c) * inv;
            if (f.is_zero()) continue;
            for (int k = c; k < n; ++k) m.at(r, k) -= f * m.at(c, k);
        }
    }
    return d;
}

std::vector<int> QMat::rref_in_place() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int pivot = -1;
        for (int r = row; r < rows_; ++r)
            if (!at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int k = 0; k < cols_; ++k) std::swap(at(pivot, k), at(row, k));
        GaussianRational inv = at(row, col).inverse();
        for (int k = 0; k < cols_; ++k) at(row, k) *= inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == row || at(r, col).is_zero()) continue;
            GaussianRational f = at(r, col);
            for (int k = 0; k < cols_; ++k) at(r, k) -= f * at(row, k);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int QMat::rank() const {
    QMat m = *this;
    return (int)m.rref_in_place().size();
}

std::optional<QVec> QMat::solve(const QVec& b) const {
    if ((int)b.size() != rows_) fail(errc::shape_error, "solve shape mismatch");
    QMat aug = hstack(QMat::from_columns(rows_, {b}));
    std::vector<int> pivots = aug.rref_in_place();
    // inconsistent iff a pivot lands in the appended column
    for (int p : pivots)
        if (p == cols_) return std::nullopt;
    QVec x(cols_);
    for (int i = 0; i < (int)pivots.size(); ++i) x[pivots[i]] = aug.at(i, cols_);
    return x;
}

std::vector<QVec> QMat::nullspace() const {
    QMat m = *this;
    std::vector<int> pivots = m.rref_in_place();
    std::vector<bool> is_pivot(cols_, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<QVec> basis;
    for (int col = 0; col < cols_; ++col) {
        if (is_pivot[col]) continue;
        QVec v(cols_);
        v[col] = GaussianRational(1);
        for (int i = 0; i < (int)pivots.size(); ++i) v[pivots[i]] = -m.at(i, col);
        basis.push_back(v);
    }
    return basis;
}

GaussianRational dot(const QVec& a, const QVec& b) {
    GaussianRational s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

QVec vec_sub(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

QVec vec_scaled(const QVec& a, const GaussianRational& c) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
    return r;
}

} // namespace sqec
