#pragma once

#include "matpoly/newton.hpp"
#include "matpoly/ratmat.hpp"
#include "matpoly/vandermonde.hpp"

namespace matpoly {

/// Matrix of a linear map between the standard bases: matrix units E_ij in
/// row-major order on the matrix side, powers {1, t, ..., t^(mn-1)} on the
/// polynomial side.
struct CoordinateMatrix {
    int order = 0;
    std::string row_basis;
    std::string col_basis;
    RatMatrix mat;
};

/// The matrix -> polynomial isomorphism: the unique interpolant of the data
/// in the direction's projection space. Identical to solve_general.
ProjectedPolynomial apply_T(const MatrixData& data, const DirectionPair& dir);

/// The inverse map: grid evaluation (p(i,j)) of a polynomial of degree in t
/// at most mn-1. Throws shape_error when the degree exceeds mn-1.
MatrixData apply_S(const ProjectedPolynomial& p, int m, int n);

/// Column j holds the power-form coefficients of T applied to the j-th
/// matrix unit; equals the exact inverse of the coefficient matrix.
CoordinateMatrix coordinate_matrix_T(int m, int n, const DirectionPair& dir);

/// The coordinate matrix of S is the coefficient (Vandermonde) matrix itself.
CoordinateMatrix coordinate_matrix_S(int m, int n, const DirectionPair& dir);

/// Monic characteristic polynomial det(zI - A), coefficients ascending in z.
/// Exact cofactor expansion over polynomial entries; meant for desk-scale
/// orders.
std::vector<Rational> characteristic_polynomial(const MatrixData& a);

/// sum_k c_k T(A^k) where sum c_k z^k is the characteristic polynomial of A.
/// By linearity of T and the Cayley-Hamilton theorem the result is the zero
/// polynomial; returned so callers can assert it coefficient by coefficient.
ProjectedPolynomial cayley_hamilton_check(const MatrixData& a, const DirectionPair& dir);

} // namespace matpoly
