#pragma once

#include "matpoly/bivariate.hpp"
#include "matpoly/core.hpp"

namespace matpoly {

/// Classical tensor-product interpolant on the grid: the unique polynomial of
/// degree <= m-1 in x and <= n-1 in y through all mn data points, built from
/// univariate Lagrange cardinal polynomials on {1..m} and {1..n}.
BivariatePolynomial tensor_interpolate(const MatrixData& data);

} // namespace matpoly
