#pragma once

#include <map>
#include <utility>
#include <vector>

#include "matpoly/rational.hpp"

namespace matpoly {

/// Exponent pair (a, b) of a monomial x^a y^b.
using Monomial = std::pair<int, int>;

/// Graded-lex order: lower total degree first, then higher x-exponent first.
/// For k = 1 this yields (0,0), (1,0), (0,1).
struct GradedLexLess {
    bool operator()(const Monomial& lhs, const Monomial& rhs) const {
        int dl = lhs.first + lhs.second, dr = rhs.first + rhs.second;
        if (dl != dr) return dl < dr;
        return lhs.first > rhs.first;
    }
};

/// Sparse bivariate polynomial: coefficient map over monomials x^a y^b.
/// Zero coefficients are never stored; the empty map is the zero polynomial.
class BivariatePolynomial {
public:
    BivariatePolynomial() = default;
    explicit BivariatePolynomial(const Rational& constant) { set_coeff(0, 0, constant); }

    Rational coeff(int a, int b) const;
    void set_coeff(int a, int b, const Rational& value);
    void add_term(int a, int b, const Rational& value);

    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;
    int max_x_degree() const;
    int max_y_degree() const;

    Rational evaluate(const Rational& x, const Rational& y) const;

    /// Terms in graded-lex order.
    const std::map<Monomial, Rational, GradedLexLess>& terms() const { return terms_; }

    BivariatePolynomial& operator+=(const BivariatePolynomial& o);
    BivariatePolynomial& operator-=(const BivariatePolynomial& o);
    friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
    friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) { return a -= b; }
    friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
    BivariatePolynomial& scale(const Rational& s);

    friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) {
        return a.terms_ == b.terms_;
    }

private:
    std::map<Monomial, Rational, GradedLexLess> terms_;
};

/// Exact value of P at (x, y).
Rational evaluate_bivariate(const BivariatePolynomial& p, const Rational& x, const Rational& y);

} // namespace matpoly
