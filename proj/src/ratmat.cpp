#include "matpoly/ratmat.hpp"

namespace matpoly {

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) throw shape_error("matrix dimensions must be positive");
    a_.resize(static_cast<size_t>(rows) * cols);
}

RatMatrix RatMatrix::identity(int order) {
    RatMatrix out(order, order);
    for (int i = 0; i < order; ++i) out(i, i) = Rational(1);
    return out;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw shape_error("matrix product dimension mismatch");
    RatMatrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& aik = (*this)(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) out(i, j) += aik * o(k, j);
        }
    return out;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

Rational RatMatrix::determinant() const {
    if (rows_ != cols_) throw shape_error("determinant of non-square matrix");
    RatMatrix w = *this;
    int n = rows_;
    Rational det(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!w(r, col).is_zero()) { pivot = r; break; }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            for (int c = col; c < n; ++c) std::swap(w(pivot, c), w(col, c));
            det = -det;
        }
        det *= w(col, col);
        for (int r = col + 1; r < n; ++r) {
            if (w(r, col).is_zero()) continue;
            Rational f = w(r, col) / w(col, col);
            for (int c = col; c < n; ++c) w(r, c) -= f * w(col, c);
        }
    }
    return det;
}

std::vector<Rational> RatMatrix::solve(const std::vector<Rational>& rhs) const {
    if (rows_ != cols_) throw shape_error("solve requires a square matrix");
    if (rhs.size() != static_cast<size_t>(rows_)) throw shape_error("rhs length mismatch");
    int n = rows_;
    RatMatrix w = *this;
    std::vector<Rational> b = rhs;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!w(r, col).is_zero()) { pivot = r; break; }
        if (pivot < 0) throw shape_error("singular system");
        if (pivot != col) {
            for (int c = col; c < n; ++c) std::swap(w(pivot, c), w(col, c));
            std::swap(b[pivot], b[col]);
        }
        for (int r = col + 1; r < n; ++r) {
            if (w(r, col).is_zero()) continue;
            Rational f = w(r, col) / w(col, col);
            for (int c = col; c < n; ++c) w(r, c) -= f * w(col, c);
            b[r] -= f * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (int r = n - 1; r >= 0; --r) {
        Rational acc = b[r];
        for (int c = r + 1; c < n; ++c) acc -= w(r, c) * x[c];
        x[r] = acc / w(r, r);
    }
    return x;
}

RatMatrix RatMatrix::inverse() const {
    if (rows_ != cols_) throw shape_error("inverse of non-square matrix");
    int n = rows_;
    RatMatrix w = *this;
    RatMatrix inv = identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!w(r, col).is_zero()) { pivot = r; break; }
        if (pivot < 0) throw shape_error("singular matrix");
        if (pivot != col)
            for (int c = 0; c < n; ++c) {
                std::swap(w(pivot, c), w(col, c));
                std::swap(inv(pivot, c), inv(col, c));
            }
        Rational p = w(col, col);
        for (int c = 0; c < n; ++c) {
            w(col, c) /= p;
            inv(col, c) /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || w(r, col).is_zero()) continue;
            Rational f = w(r, col);
            for (int c = 0; c < n; ++c) {
                w(r, c) -= f * w(col, c);
                inv(r, c) -= f * inv(col, c);
            }
        }
    }
    return inv;
}

} // namespace matpoly
