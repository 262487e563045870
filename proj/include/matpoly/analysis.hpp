#pragma once

#include <string>
#include <vector>

#include "matpoly/bivariate.hpp"
#include "matpoly/core.hpp"
#include "matpoly/newton.hpp"

namespace matpoly {

/// Rectangular evaluation mesh with inclusive endpoints. Steps must be
/// positive and (end - start) / step an exact non-negative integer.
struct EvalGrid {
    Rational x_start, x_end, x_step;
    Rational y_start, y_end, y_step;

    /// Parses "x0:x1:h,y0:y1:k" with exact rational components.
    static EvalGrid parse(const std::string& text);

    void validate() const;
    int x_count() const;
    int y_count() const;
    Rational x_at(int col) const { return x_start + Rational(col) * x_step; }
    Rational y_at(int row) const { return y_start + Rational(row) * y_step; }
};

/// Exact 2-D table of values over an EvalGrid; rows run over y, columns over
/// x (the paper's table orientation).
struct ErrorTable {
    EvalGrid grid;
    std::vector<std::vector<Rational>> values; // values[row][col]
};

/// |ref(x,y) - approx(x,y)| at every mesh point, exact.
ErrorTable abs_error_field(const ProjectedPolynomial& approx, const BivariatePolynomial& ref,
                           const EvalGrid& grid);
ErrorTable abs_error_field(const BivariatePolynomial& approx, const BivariatePolynomial& ref,
                           const EvalGrid& grid);

enum class InterpolantKind { row, col };

/// The comparative table: |ref - p| - |ref - P| where p is the projected
/// (column-wise by default) interpolant of the data and P the tensor
/// baseline. The reference polynomial must reproduce the data at every grid
/// node; otherwise a mismatch_error is thrown.
ErrorTable error_difference_table(const MatrixData& data, const BivariatePolynomial& ref,
                                  const EvalGrid& grid,
                                  InterpolantKind kind = InterpolantKind::col);

/// Wide CSV: header row of x values, first column of y values, entries
/// rounded half away from zero to `decimals` places.
std::string emit_table_csv(const ErrorTable& table, int decimals);

/// Long-form CSV "x,y,value", one row per mesh point, suitable for plotting
/// tools.
std::string emit_long_csv(const ErrorTable& table, int decimals);

} // namespace matpoly
