#pragma once

#include <vector>

#include "matpoly/rational.hpp"

namespace matpoly {

/// Dense matrix of exact rationals with Gaussian elimination primitives.
/// Indices are 0-based here; this is internal linear algebra, not the 1-based
/// interpolation grid.
class RatMatrix {
public:
    RatMatrix(int rows, int cols);
    static RatMatrix identity(int order);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Rational& operator()(int r, int c) const { return a_[idx(r, c)]; }
    Rational& operator()(int r, int c) { return a_[idx(r, c)]; }

    RatMatrix operator*(const RatMatrix& o) const;
    friend bool operator==(const RatMatrix& a, const RatMatrix& b);

    /// Exact determinant via Gaussian elimination (first nonzero pivot,
    /// deterministic row order).
    Rational determinant() const;

    /// Solves A x = rhs exactly. Throws shape_error when A is singular or
    /// the dimensions do not match.
    std::vector<Rational> solve(const std::vector<Rational>& rhs) const;

    /// Exact inverse via Gauss-Jordan. Throws shape_error when singular.
    RatMatrix inverse() const;

private:
    size_t idx(int r, int c) const { return static_cast<size_t>(r) * cols_ + c; }
    int rows_, cols_;
    std::vector<Rational> a_;
};

} // namespace matpoly
