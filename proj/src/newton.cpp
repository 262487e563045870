#include "matpoly/newton.hpp"

#include "matpoly/upoly.hpp"

namespace matpoly {

int linearize_row(int i, int j, int m, int n) {
    if (i < 1 || i > m || j < 1 || j > n) throw shape_error("node index out of range");
    return (i - 1) * n + j;
}

int linearize_col(int i, int j, int m, int n) {
    if (i < 1 || i > m || j < 1 || j > n) throw shape_error("node index out of range");
    return i + (j - 1) * m;
}

ForwardDifferenceTable forward_differences(const std::vector<Rational>& seq) {
    if (seq.empty()) throw shape_error("forward differences of an empty sequence");
    ForwardDifferenceTable table;
    table.column0 = seq;
    table.diagonal.reserve(seq.size());
    std::vector<Rational> level = seq;
    table.diagonal.push_back(level.front());
    while (level.size() > 1) {
        for (size_t r = 0; r + 1 < level.size(); ++r) level[r] = level[r + 1] - level[r];
        level.pop_back();
        table.diagonal.push_back(level.front());
    }
    return table;
}

std::vector<Rational> newton_to_power_form(const std::vector<Rational>& diffs,
                                           const Rational& shift) {
    if (diffs.empty()) throw shape_error("empty Newton coefficient list");
    // basis = C(t - shift, k), maintained incrementally as a polynomial in t.
    UPoly basis = UPoly::constant(Rational(1));
    UPoly acc = UPoly::constant(diffs[0]);
    for (size_t k = 1; k < diffs.size(); ++k) {
        basis = basis * UPoly::linear_root(shift + Rational(static_cast<long>(k) - 1));
        basis.scale(Rational(1, static_cast<long>(k)));
        UPoly term = basis;
        term.scale(diffs[k]);
        acc += term;
    }
    std::vector<Rational> out(diffs.size());
    for (size_t k = 0; k < out.size(); ++k) out[k] = acc.coeff(k);
    return out;
}

ProjectedPolynomial ProjectedPolynomial::from_newton(const DirectionPair& dir,
                                                     const Rational& shift,
                                                     std::vector<Rational> newton_diffs) {
    ProjectedPolynomial p;
    p.dir_ = dir;
    p.shift_ = shift;
    p.power_coeffs_ = newton_to_power_form(newton_diffs, shift);
    p.newton_diffs_ = std::move(newton_diffs);
    return p;
}

ProjectedPolynomial ProjectedPolynomial::from_power_coeffs(const DirectionPair& dir,
                                                           std::vector<Rational> power_coeffs) {
    if (power_coeffs.empty()) throw shape_error("empty power coefficient list");
    ProjectedPolynomial p;
    p.dir_ = dir;
    p.shift_ = dir.alpha + dir.beta;
    // Sample the polynomial on the unit-step progression starting at the
    // shift; its forward differences give an exact Newton form.
    UPoly poly{power_coeffs};
    std::vector<Rational> samples(power_coeffs.size());
    for (size_t r = 0; r < samples.size(); ++r)
        samples[r] = poly.eval(p.shift_ + Rational(static_cast<long>(r)));
    p.newton_diffs_ = forward_differences(samples).diagonal;
    p.power_coeffs_ = std::move(power_coeffs);
    return p;
}

int ProjectedPolynomial::degree() const {
    for (int k = static_cast<int>(power_coeffs_.size()) - 1; k >= 0; --k)
        if (!power_coeffs_[k].is_zero()) return k;
    return 0;
}

bool ProjectedPolynomial::is_zero() const {
    for (const auto& c : power_coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

Rational ProjectedPolynomial::evaluate(const Rational& x, const Rational& y) const {
    Rational t = dir_.alpha * x + dir_.beta * y;
    Rational acc;
    for (size_t k = power_coeffs_.size(); k-- > 0;) acc = acc * t + power_coeffs_[k];
    return acc;
}

Rational ProjectedPolynomial::evaluate_newton_form(const Rational& x, const Rational& y) const {
    Rational s = dir_.alpha * x + dir_.beta * y - shift_;
    Rational binom(1); // C(s, 0)
    Rational acc = newton_diffs_.empty() ? Rational(0) : newton_diffs_[0];
    for (size_t k = 1; k < newton_diffs_.size(); ++k) {
        binom *= (s - Rational(static_cast<long>(k) - 1)) / Rational(static_cast<long>(k));
        acc += newton_diffs_[k] * binom;
    }
    return acc;
}

bool operator==(const ProjectedPolynomial& a, const ProjectedPolynomial& b) {
    if (!(a.dir_ == b.dir_)) return false;
    size_t n = std::max(a.power_coeffs_.size(), b.power_coeffs_.size());
    for (size_t k = 0; k < n; ++k) {
        Rational ca = k < a.power_coeffs_.size() ? a.power_coeffs_[k] : Rational(0);
        Rational cb = k < b.power_coeffs_.size() ? b.power_coeffs_[k] : Rational(0);
        if (ca != cb) return false;
    }
    return true;
}

ProjectedPolynomial interpolate_row(const MatrixData& data) {
    int n = data.cols();
    auto table = forward_differences(data.row_major());
    DirectionPair dir{Rational(n), Rational(1)};
    return ProjectedPolynomial::from_newton(dir, Rational(n + 1), table.diagonal);
}

ProjectedPolynomial interpolate_col(const MatrixData& data) {
    int m = data.rows();
    auto table = forward_differences(data.col_major());
    DirectionPair dir{Rational(1), Rational(m)};
    return ProjectedPolynomial::from_newton(dir, Rational(m + 1), table.diagonal);
}

Rational evaluate_projected(const ProjectedPolynomial& p, const Rational& x, const Rational& y) {
    return p.evaluate(x, y);
}

BivariatePolynomial expand_to_bivariate(const ProjectedPolynomial& p) {
    BivariatePolynomial out;
    const auto& coeffs = p.power_coeffs();
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        // (alpha*x + beta*y)^k = sum_a C(k,a) alpha^a beta^(k-a) x^a y^(k-a)
        Rational binom(1);
        for (size_t a = 0; a <= k; ++a) {
            if (a > 0) binom = binom * Rational(static_cast<long>(k - a + 1)) / Rational(static_cast<long>(a));
            Rational c = coeffs[k] * binom * p.dir().alpha.pow(static_cast<unsigned>(a)) *
                         p.dir().beta.pow(static_cast<unsigned>(k - a));
            out.add_term(static_cast<int>(a), static_cast<int>(k - a), c);
        }
    }
    return out;
}

} // namespace matpoly
