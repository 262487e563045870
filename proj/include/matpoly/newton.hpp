#pragma once

#include <vector>

#include "matpoly/bivariate.hpp"
#include "matpoly/core.hpp"

namespace matpoly {

/// Forward-difference table of a value sequence. `diagonal[k]` is the k-th
/// forward difference of the first element, the Newton-Gregory coefficients.
struct ForwardDifferenceTable {
    std::vector<Rational> column0;
    std::vector<Rational> diagonal;
};

/// A univariate polynomial in the projection t = alpha*x + beta*y, carried in
/// two equivalent representations:
///  - power form: power_coeffs[k] is the coefficient of t^k (canonical form,
///    trailing zeros retained so the length is always the problem size mn);
///  - Newton shifted form: sum_k newton_diffs[k] * C(t - shift, k), where
///    C(s, k) is the falling factorial s(s-1)...(s-k+1)/k!.
/// For the row/column constructors the Newton data is the paper's forward
/// difference table of the matrix entries; for general solutions it is the
/// forward-difference table of the polynomial sampled at t = shift, shift+1,
/// ..., which represents the same polynomial exactly.
class ProjectedPolynomial {
public:
    /// Builds the canonical Newton form from power coefficients
    /// (shift = alpha + beta, unit-step sampling).
    static ProjectedPolynomial from_power_coeffs(const DirectionPair& dir,
                                                 std::vector<Rational> power_coeffs);
    /// Builds the power form from Newton data.
    static ProjectedPolynomial from_newton(const DirectionPair& dir, const Rational& shift,
                                           std::vector<Rational> newton_diffs);

    const DirectionPair& dir() const { return dir_; }
    const Rational& shift() const { return shift_; }
    const std::vector<Rational>& newton_diffs() const { return newton_diffs_; }
    const std::vector<Rational>& power_coeffs() const { return power_coeffs_; }

    /// mn - 1 for a polynomial produced by an mn-point solve.
    int degree_bound() const { return static_cast<int>(power_coeffs_.size()) - 1; }
    /// Actual degree in t (trailing zero coefficients ignored); 0 for the
    /// zero polynomial.
    int degree() const;
    bool is_zero() const;

    /// Horner evaluation of the power form at t = alpha*x + beta*y.
    Rational evaluate(const Rational& x, const Rational& y) const;
    /// Evaluation through the Newton binomial form; used to cross-check the
    /// two representations.
    Rational evaluate_newton_form(const Rational& x, const Rational& y) const;

    /// Equality of the canonical form: same direction, same power
    /// coefficients (up to trailing zeros).
    friend bool operator==(const ProjectedPolynomial& a, const ProjectedPolynomial& b);

private:
    ProjectedPolynomial() = default;
    DirectionPair dir_;
    Rational shift_;
    std::vector<Rational> newton_diffs_;
    std::vector<Rational> power_coeffs_;
};

/// Row-major grid linearization (i-1)*n + j, a bijection onto {1,...,mn}.
int linearize_row(int i, int j, int m, int n);
/// Column-major grid linearization i + (j-1)*m.
int linearize_col(int i, int j, int m, int n);

ForwardDifferenceTable forward_differences(const std::vector<Rational>& seq);

/// Expands sum_k diffs[k] * C(t - shift, k) into power coefficients of t.
/// The output length equals diffs.size(); trailing zeros are retained.
std::vector<Rational> newton_to_power_form(const std::vector<Rational>& diffs,
                                           const Rational& shift);

/// Newton-Gregory interpolant over the row-wise ordering: direction (n, 1),
/// shift n + 1. Reproduces every matrix entry exactly.
ProjectedPolynomial interpolate_row(const MatrixData& data);
/// Newton-Gregory interpolant over the column-wise ordering: direction
/// (1, m), shift m + 1.
ProjectedPolynomial interpolate_col(const MatrixData& data);

Rational evaluate_projected(const ProjectedPolynomial& p, const Rational& x, const Rational& y);

/// Binomial expansion of sum_k lambda_k (alpha*x + beta*y)^k.
BivariatePolynomial expand_to_bivariate(const ProjectedPolynomial& p);

} // namespace matpoly
