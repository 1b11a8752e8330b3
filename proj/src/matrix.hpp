#ifndef SQEC_MATRIX_HPP
#define SQEC_MATRIX_HPP

#include <optional>
#include <vector>

#include "gaussian.hpp"

namespace sqec {

using QVec = std::vector<GaussianRational>;

/// Dense matrix over Q(i). Small dimensions only; exact arithmetic throughout.
class QMat {
public:
    QMat() : rows_(0), cols_(0) {}
    QMat(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static QMat identity(int n);
    static QMat from_columns(int rows, const std::vector<QVec>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    GaussianRational& at(int r, int c) { return a_[r * cols_ + c]; }
    const GaussianRational& at(int r, int c) const { return a_[r * cols_ + c]; }

    QVec column(int c) const;
    void set_column(int c, const QVec& v);
    QMat transpose() const;
    QMat hstack(const QMat& o) const;
    bool is_zero() const;
    bool is_symmetric() const;

    friend QMat operator*(const QMat& a, const QMat& b);
    QVec apply(const QVec& v) const;

    bool operator==(const QMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    GaussianRational det() const;
    int rank() const;

    /// Reduced row echelon form; returns pivot column indices.
    std::vector<int> rref_in_place();

    /// Particular solution of A x = b with all free variables set to zero
    /// (the column-lex-first candidate), or nullopt if inconsistent.
    std::optional<QVec> solve(const QVec& b) const;

    /// Deterministic nullspace basis (one vector per free column, RREF-based).
    std::vector<QVec> nullspace() const;

private:
    int rows_, cols_;
    std::vector<GaussianRational> a_;
};

GaussianRational dot(const QVec& a, const QVec& b);
QVec vec_sub(const QVec& a, const QVec& b);
QVec vec_scaled(const QVec& a, const GaussianRational& c);

} // namespace sqec

#endif
