#pragma once

#include <vector>

#include "matpoly/rational.hpp"

namespace matpoly {

/// Dense univariate polynomial over Rational, coefficients in ascending
/// powers. Used for Newton-form expansions, Lagrange cardinals, and
/// characteristic polynomials; not part of the interpolation API itself.
struct UPoly {
    std::vector<Rational> c{Rational(0)};

    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs) : c(std::move(coeffs)) {
        if (c.empty()) c.push_back(Rational(0));
    }
    static UPoly constant(Rational v) { return UPoly({std::move(v)}); }
    /// x - root
    static UPoly linear_root(const Rational& root) { return UPoly({-root, Rational(1)}); }

    int degree() const {
        for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k)
            if (!c[k].is_zero()) return k;
        return 0;
    }

    Rational coeff(size_t k) const { return k < c.size() ? c[k] : Rational(0); }

    Rational eval(const Rational& x) const {
        Rational acc;
        for (size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
        return acc;
    }

    UPoly& operator+=(const UPoly& o) {
        if (o.c.size() > c.size()) c.resize(o.c.size());
        for (size_t k = 0; k < o.c.size(); ++k) c[k] += o.c[k];
        return *this;
    }
    UPoly& operator-=(const UPoly& o) {
        if (o.c.size() > c.size()) c.resize(o.c.size());
        for (size_t k = 0; k < o.c.size(); ++k) c[k] -= o.c[k];
        return *this;
    }
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }

    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        std::vector<Rational> out(a.c.size() + b.c.size() - 1);
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i].is_zero()) continue;
            for (size_t j = 0; j < b.c.size(); ++j) out[i + j] += a.c[i] * b.c[j];
        }
        return UPoly(std::move(out));
    }

    UPoly& scale(const Rational& s) {
        for (auto& v : c) v *= s;
        return *this;
    }
};

} // namespace matpoly
