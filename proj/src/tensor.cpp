#include "matpoly/tensor.hpp"

#include "matpoly/upoly.hpp"

namespace matpoly {

namespace {

// Lagrange cardinal polynomials on the nodes {1, ..., count}:
// card[i](x) is 1 at x = i+1 and 0 at the other nodes.
std::vector<UPoly> cardinal_basis(int count) {
    std::vector<UPoly> basis;
    basis.reserve(count);
    for (int i = 1; i <= count; ++i) {
        UPoly p = UPoly::constant(Rational(1));
        Rational denom(1);
        for (int r = 1; r <= count; ++r) {
            if (r == i) continue;
            p = p * UPoly::linear_root(Rational(r));
            denom *= Rational(i - r);
        }
        p.scale(Rational(1) / denom);
        basis.push_back(std::move(p));
    }
    return basis;
}

} // namespace

BivariatePolynomial tensor_interpolate(const MatrixData& data) {
    int m = data.rows(), n = data.cols();
    auto lx = cardinal_basis(m);
    auto ly = cardinal_basis(n);
    BivariatePolynomial out;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) {
            const Rational& value = data.at(i, j);
            if (value.is_zero()) continue;
            for (size_t a = 0; a < lx[i - 1].c.size(); ++a)
                for (size_t b = 0; b < ly[j - 1].c.size(); ++b) {
                    Rational c = value * lx[i - 1].c[a] * ly[j - 1].c[b];
                    out.add_term(static_cast<int>(a), static_cast<int>(b), c);
                }
        }
    return out;
}

} // namespace matpoly
