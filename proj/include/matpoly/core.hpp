#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "matpoly/rational.hpp"

namespace matpoly {

/// A grid point (i, j), 1-based in both coordinates.
struct Node {
    int i = 0;
    int j = 0;
    friend bool operator==(const Node&, const Node&) = default;
};

/// The full integer lattice {(i,j) : 1<=i<=m, 1<=j<=n} in row-major order.
struct NodeGrid {
    int m = 0;
    int n = 0;
    std::vector<Node> nodes;
};

/// Parameters of the linear form t = alpha*x + beta*y.
struct DirectionPair {
    Rational alpha;
    Rational beta;
    friend bool operator==(const DirectionPair&, const DirectionPair&) = default;
};

/// An m x n grid of exact rationals, indexed 1-based like the node grid.
class MatrixData {
public:
    MatrixData(int m, int n);
    MatrixData(int m, int n, std::vector<Rational> entries);
    static MatrixData from_rows(const std::vector<std::vector<Rational>>& rows);
    static MatrixData identity(int order);

    int rows() const { return m_; }
    int cols() const { return n_; }

    const Rational& at(int i, int j) const;
    Rational& at(int i, int j);

    /// Entries in the order a11, a12, ..., a1n, a21, ...
    std::vector<Rational> row_major() const { return entries_; }
    /// Entries in the order a11, a21, ..., am1, a12, ...
    std::vector<Rational> col_major() const;

    MatrixData transposed() const;

    MatrixData& operator+=(const MatrixData& o);
    friend MatrixData operator+(MatrixData a, const MatrixData& b) { return a += b; }
    friend MatrixData operator*(const Rational& s, const MatrixData& a);
    /// Exact matrix product; both operands must be square of equal order.
    friend MatrixData operator*(const MatrixData& a, const MatrixData& b);
    friend bool operator==(const MatrixData& a, const MatrixData& b);

private:
    int m_, n_;
    std::vector<Rational> entries_; // row-major
};

/// dim of the total-degree-k bivariate polynomial space: (k+1)(k+2)/2.
int pi2_dimension(int k);

NodeGrid grid_nodes(int m, int n);

/// alpha*i + beta*j.
Rational project(const Node& node, const DirectionPair& dir);

/// True iff all mn node projections are pairwise distinct. This is what the
/// Vandermonde argument needs; it is stronger than only checking pairs that
/// differ in both coordinates.
bool direction_valid(const NodeGrid& grid, const DirectionPair& dir);

/// First node pair sharing a projection value (scan order: row-major pairs),
/// or nullopt when the direction is valid.
std::optional<std::pair<Node, Node>> first_collision(const NodeGrid& grid,
                                                     const DirectionPair& dir);

/// Throws collision_error describing the first colliding pair, if any.
void require_valid_direction(const NodeGrid& grid, const DirectionPair& dir);

} // namespace matpoly
