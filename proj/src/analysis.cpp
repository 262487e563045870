#include "matpoly/analysis.hpp"

#include <functional>
#include <sstream>

#include "matpoly/tensor.hpp"

namespace matpoly {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    size_t pos = 0;
    for (;;) {
        size_t next = text.find(sep, pos);
        if (next == std::string::npos) {
            parts.push_back(text.substr(pos));
            return parts;
        }
        parts.push_back(text.substr(pos, next - pos));
        pos = next + 1;
    }
}

// Number of inclusive steps from start to end; throws unless it is an exact
// non-negative integer.
int axis_count(const Rational& start, const Rational& end, const Rational& step) {
    if (step.sign() <= 0) throw shape_error("grid step must be positive");
    Rational span = (end - start) / step;
    if (span.sign() < 0 || !span.is_integer())
        throw shape_error("grid endpoints are not an integer number of steps apart");
    if (span.numerator() > 1000000) throw shape_error("grid is unreasonably large");
    return static_cast<int>(span.numerator().get_si()) + 1;
}

using PointFn = std::function<Rational(const Rational&, const Rational&)>;

ErrorTable tabulate(const EvalGrid& grid, const PointFn& fn) {
    grid.validate();
    ErrorTable table{grid, {}};
    int rows = grid.y_count(), cols = grid.x_count();
    table.values.resize(rows);
    for (int r = 0; r < rows; ++r) {
        table.values[r].reserve(cols);
        Rational y = grid.y_at(r);
        for (int c = 0; c < cols; ++c) table.values[r].push_back(fn(grid.x_at(c), y));
    }
    return table;
}

} // namespace

EvalGrid EvalGrid::parse(const std::string& text) {
    auto axes = split(text, ',');
    if (axes.size() != 2) throw parse_error("grid must be \"x0:x1:h,y0:y1:k\"");
    auto xs = split(axes[0], ':');
    auto ys = split(axes[1], ':');
    if (xs.size() != 3 || ys.size() != 3) throw parse_error("grid axis must be start:end:step");
    EvalGrid grid{Rational::from_string(xs[0]), Rational::from_string(xs[1]),
                  Rational::from_string(xs[2]), Rational::from_string(ys[0]),
                  Rational::from_string(ys[1]), Rational::from_string(ys[2])};
    grid.validate();
    return grid;
}

void EvalGrid::validate() const {
    axis_count(x_start, x_end, x_step);
    axis_count(y_start, y_end, y_step);
}

int EvalGrid::x_count() const { return axis_count(x_start, x_end, x_step); }
int EvalGrid::y_count() const { return axis_count(y_start, y_end, y_step); }

ErrorTable abs_error_field(const ProjectedPolynomial& approx, const BivariatePolynomial& ref,
                           const EvalGrid& grid) {
    return tabulate(grid, [&](const Rational& x, const Rational& y) {
        return (ref.evaluate(x, y) - approx.evaluate(x, y)).abs();
    });
}

ErrorTable abs_error_field(const BivariatePolynomial& approx, const BivariatePolynomial& ref,
                           const EvalGrid& grid) {
    return tabulate(grid, [&](const Rational& x, const Rational& y) {
        return (ref.evaluate(x, y) - approx.evaluate(x, y)).abs();
    });
}

ErrorTable error_difference_table(const MatrixData& data, const BivariatePolynomial& ref,
                                  const EvalGrid& grid, InterpolantKind kind) {
    for (int i = 1; i <= data.rows(); ++i)
        for (int j = 1; j <= data.cols(); ++j) {
            Rational expected = ref.evaluate(Rational(i), Rational(j));
            if (expected != data.at(i, j)) {
                std::ostringstream msg;
                msg << "reference polynomial gives " << expected << " at node (" << i << "," << j
                    << ") but the matrix holds " << data.at(i, j);
                throw mismatch_error(msg.str());
            }
        }
    ProjectedPolynomial projected =
        kind == InterpolantKind::col ? interpolate_col(data) : interpolate_row(data);
    BivariatePolynomial baseline = tensor_interpolate(data);
    return tabulate(grid, [&](const Rational& x, const Rational& y) {
        Rational fxy = ref.evaluate(x, y);
        return (fxy - projected.evaluate(x, y)).abs() - (fxy - baseline.evaluate(x, y)).abs();
    });
}

std::string emit_table_csv(const ErrorTable& table, int decimals) {
    if (decimals < 0) throw shape_error("negative decimal count");
    std::ostringstream out;
    int cols = table.grid.x_count();
    for (int c = 0; c < cols; ++c) out << ',' << decimal_or_fraction(table.grid.x_at(c));
    out << '\n';
    for (size_t r = 0; r < table.values.size(); ++r) {
        out << decimal_or_fraction(table.grid.y_at(static_cast<int>(r)));
        for (const Rational& value : table.values[r])
            out << ',' << round_decimal_string(value, decimals);
        out << '\n';
    }
    return out.str();
}

std::string emit_long_csv(const ErrorTable& table, int decimals) {
    if (decimals < 0) throw shape_error("negative decimal count");
    std::ostringstream out;
    out << "x,y,value\n";
    for (size_t r = 0; r < table.values.size(); ++r) {
        Rational y = table.grid.y_at(static_cast<int>(r));
        for (size_t c = 0; c < table.values[r].size(); ++c) {
            out << decimal_or_fraction(table.grid.x_at(static_cast<int>(c))) << ','
                << decimal_or_fraction(y) << ',' << round_decimal_string(table.values[r][c], decimals)
                << '\n';
        }
    }
    return out.str();
}

} // namespace matpoly
