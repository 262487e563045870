#pragma once

#include "matpoly/newton.hpp"
#include "matpoly/ratmat.hpp"

namespace matpoly {

/// The coefficient matrix of the interpolation system: row r holds the powers
/// 1, t_r, t_r^2, ... of the projection of the r-th node, nodes in row-major
/// order a11, a12, ..., a1n, a21, ...
struct LambdaMatrix {
    int m = 0;
    int n = 0;
    DirectionPair dir;
    std::vector<Rational> projections; // t_r, row-major node order
    RatMatrix mat;
};

LambdaMatrix build_lambda_matrix(int m, int n, const DirectionPair& dir);

/// Exact determinant of the coefficient matrix; zero exactly when the
/// direction is invalid for the grid.
Rational lambda_determinant(int m, int n, const DirectionPair& dir);

/// Solves the full mn x mn Vandermonde system exactly. The reference solver:
/// O((mn)^3) but certified, used as the oracle for the faster paths.
/// Throws collision_error (naming the first colliding node pair) when the
/// direction is invalid.
ProjectedPolynomial solve_general(const MatrixData& data, const DirectionPair& dir);

/// Newton divided differences over the (generally unequally spaced)
/// projections; same polynomial as solve_general in O((mn)^2).
ProjectedPolynomial divided_difference_solve(const MatrixData& data, const DirectionPair& dir);

} // namespace matpoly
