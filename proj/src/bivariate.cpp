#include "matpoly/bivariate.hpp"

#include <algorithm>

namespace matpoly {

Rational BivariatePolynomial::coeff(int a, int b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? Rational(0) : it->second;
}

void BivariatePolynomial::set_coeff(int a, int b, const Rational& value) {
    if (a < 0 || b < 0) throw shape_error("negative monomial exponent");
    if (value.is_zero())
        terms_.erase({a, b});
    else
        terms_[{a, b}] = value;
}

void BivariatePolynomial::add_term(int a, int b, const Rational& value) {
    set_coeff(a, b, coeff(a, b) + value);
}

int BivariatePolynomial::total_degree() const {
    int deg = 0;
    for (const auto& [mono, c] : terms_) deg = std::max(deg, mono.first + mono.second);
    return deg;
}

int BivariatePolynomial::max_x_degree() const {
    int deg = 0;
    for (const auto& [mono, c] : terms_) deg = std::max(deg, mono.first);
    return deg;
}

int BivariatePolynomial::max_y_degree() const {
    int deg = 0;
    for (const auto& [mono, c] : terms_) deg = std::max(deg, mono.second);
    return deg;
}

Rational BivariatePolynomial::evaluate(const Rational& x, const Rational& y) const {
    Rational acc;
    for (const auto& [mono, c] : terms_)
        acc += c * x.pow(static_cast<unsigned>(mono.first)) * y.pow(static_cast<unsigned>(mono.second));
    return acc;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono.first, mono.second, c);
    return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono.first, mono.second, -c);
    return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    BivariatePolynomial out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            out.add_term(ma.first + mb.first, ma.second + mb.second, ca * cb);
    return out;
}

BivariatePolynomial& BivariatePolynomial::scale(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [mono, c] : terms_) c *= s;
    return *this;
}

Rational evaluate_bivariate(const BivariatePolynomial& p, const Rational& x, const Rational& y) {
    return p.evaluate(x, y);
}

} // namespace matpoly
