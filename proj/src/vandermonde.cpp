#include "matpoly/vandermonde.hpp"

#include "matpoly/upoly.hpp"

namespace matpoly {

LambdaMatrix build_lambda_matrix(int m, int n, const DirectionPair& dir) {
    NodeGrid grid = grid_nodes(m, n);
    int order = m * n;
    LambdaMatrix lambda{m, n, dir, {}, RatMatrix(order, order)};
    lambda.projections.reserve(order);
    for (int r = 0; r < order; ++r) {
        Rational t = project(grid.nodes[r], dir);
        lambda.projections.push_back(t);
        Rational power(1);
        for (int k = 0; k < order; ++k) {
            lambda.mat(r, k) = power;
            power *= t;
        }
    }
    return lambda;
}

Rational lambda_determinant(int m, int n, const DirectionPair& dir) {
    return build_lambda_matrix(m, n, dir).mat.determinant();
}

ProjectedPolynomial solve_general(const MatrixData& data, const DirectionPair& dir) {
    NodeGrid grid = grid_nodes(data.rows(), data.cols());
    require_valid_direction(grid, dir);
    LambdaMatrix lambda = build_lambda_matrix(data.rows(), data.cols(), dir);
    std::vector<Rational> coeffs = lambda.mat.solve(data.row_major());
    return ProjectedPolynomial::from_power_coeffs(dir, std::move(coeffs));
}

ProjectedPolynomial divided_difference_solve(const MatrixData& data, const DirectionPair& dir) {
    NodeGrid grid = grid_nodes(data.rows(), data.cols());
    require_valid_direction(grid, dir);

    std::vector<Rational> t;
    t.reserve(grid.nodes.size());
    for (const Node& node : grid.nodes) t.push_back(project(node, dir));
    std::vector<Rational> dd = data.row_major();
    size_t count = dd.size();
    for (size_t level = 1; level < count; ++level)
        for (size_t r = count - 1; r >= level; --r)
            dd[r] = (dd[r] - dd[r - 1]) / (t[r] - t[r - level]);

    // p(u) = sum_k dd[k] * prod_{r<k} (u - t_r), expanded to power form.
    UPoly basis = UPoly::constant(Rational(1));
    UPoly acc = UPoly::constant(dd[0]);
    for (size_t k = 1; k < count; ++k) {
        basis = basis * UPoly::linear_root(t[k - 1]);
        UPoly term = basis;
        term.scale(dd[k]);
        acc += term;
    }
    std::vector<Rational> coeffs(count);
    for (size_t k = 0; k < count; ++k) coeffs[k] = acc.coeff(k);
    return ProjectedPolynomial::from_power_coeffs(dir, std::move(coeffs));
}

} // namespace matpoly
