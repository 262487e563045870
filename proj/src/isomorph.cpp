#include "matpoly/isomorph.hpp"

#include "matpoly/upoly.hpp"

namespace matpoly {

namespace {

// det of a square UPoly matrix by cofactor expansion along the first row.
UPoly poly_det(const std::vector<std::vector<UPoly>>& mat) {
    size_t n = mat.size();
    if (n == 1) return mat[0][0];
    UPoly acc;
    for (size_t j = 0; j < n; ++j) {
        std::vector<std::vector<UPoly>> minor;
        minor.reserve(n - 1);
        for (size_t r = 1; r < n; ++r) {
            std::vector<UPoly> row;
            row.reserve(n - 1);
            for (size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(mat[r][c]);
            minor.push_back(std::move(row));
        }
        UPoly term = mat[0][j] * poly_det(minor);
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

} // namespace

ProjectedPolynomial apply_T(const MatrixData& data, const DirectionPair& dir) {
    return solve_general(data, dir);
}

MatrixData apply_S(const ProjectedPolynomial& p, int m, int n) {
    if (p.degree() > m * n - 1)
        throw shape_error("polynomial degree exceeds mn-1 for the requested shape");
    MatrixData out(m, n);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) out.at(i, j) = p.evaluate(Rational(i), Rational(j));
    return out;
}

CoordinateMatrix coordinate_matrix_S(int m, int n, const DirectionPair& dir) {
    LambdaMatrix lambda = build_lambda_matrix(m, n, dir);
    return CoordinateMatrix{m * n, "powers of t", "matrix units (row-major)",
                            std::move(lambda.mat)};
}

CoordinateMatrix coordinate_matrix_T(int m, int n, const DirectionPair& dir) {
    require_valid_direction(grid_nodes(m, n), dir);
    LambdaMatrix lambda = build_lambda_matrix(m, n, dir);
    return CoordinateMatrix{m * n, "matrix units (row-major)", "powers of t",
                            lambda.mat.inverse()};
}

std::vector<Rational> characteristic_polynomial(const MatrixData& a) {
    if (a.rows() != a.cols()) throw shape_error("characteristic polynomial of non-square matrix");
    int n = a.rows();
    std::vector<std::vector<UPoly>> zia(n, std::vector<UPoly>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j)
                zia[i][j] = UPoly({-a.at(i + 1, j + 1), Rational(1)}); // z - a_ii
            else
                zia[i][j] = UPoly::constant(-a.at(i + 1, j + 1));
        }
    UPoly det = poly_det(zia);
    std::vector<Rational> coeffs(n + 1);
    for (int k = 0; k <= n; ++k) coeffs[k] = det.coeff(k);
    return coeffs;
}

ProjectedPolynomial cayley_hamilton_check(const MatrixData& a, const DirectionPair& dir) {
    if (a.rows() != a.cols()) throw shape_error("Cayley-Hamilton check requires a square matrix");
    std::vector<Rational> chi = characteristic_polynomial(a);

    MatrixData power = MatrixData::identity(a.rows());
    std::vector<Rational> residual;
    for (size_t k = 0; k < chi.size(); ++k) {
        ProjectedPolynomial image = apply_T(power, dir);
        const auto& coeffs = image.power_coeffs();
        if (residual.empty()) residual.assign(coeffs.size(), Rational(0));
        for (size_t c = 0; c < coeffs.size(); ++c) residual[c] += chi[k] * coeffs[c];
        if (k + 1 < chi.size()) power = power * a;
    }
    return ProjectedPolynomial::from_power_coeffs(dir, std::move(residual));
}

} // namespace matpoly
