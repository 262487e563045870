#include "matpoly/core.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace matpoly {

MatrixData::MatrixData(int m, int n) : m_(m), n_(n) {
    if (m < 1 || n < 1) throw shape_error("matrix dimensions must be positive");
    entries_.resize(static_cast<size_t>(m) * n);
}

MatrixData::MatrixData(int m, int n, std::vector<Rational> entries) : m_(m), n_(n) {
    if (m < 1 || n < 1) throw shape_error("matrix dimensions must be positive");
    if (entries.size() != static_cast<size_t>(m) * n)
        throw shape_error("matrix entry count does not match its shape");
    entries_ = std::move(entries);
}

MatrixData MatrixData::from_rows(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty() || rows.front().empty())
        throw shape_error("matrix must have at least one row and one column");
    size_t n = rows.front().size();
    std::vector<Rational> flat;
    flat.reserve(rows.size() * n);
    for (const auto& row : rows) {
        if (row.size() != n) throw shape_error("ragged matrix rows");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return MatrixData(static_cast<int>(rows.size()), static_cast<int>(n), std::move(flat));
}

MatrixData MatrixData::identity(int order) {
    MatrixData out(order, order);
    for (int i = 1; i <= order; ++i) out.at(i, i) = Rational(1);
    return out;
}

const Rational& MatrixData::at(int i, int j) const {
    if (i < 1 || i > m_ || j < 1 || j > n_) throw shape_error("matrix index out of range");
    return entries_[static_cast<size_t>(i - 1) * n_ + (j - 1)];
}

Rational& MatrixData::at(int i, int j) {
    if (i < 1 || i > m_ || j < 1 || j > n_) throw shape_error("matrix index out of range");
    return entries_[static_cast<size_t>(i - 1) * n_ + (j - 1)];
}

std::vector<Rational> MatrixData::col_major() const {
    std::vector<Rational> out;
    out.reserve(entries_.size());
    for (int j = 1; j <= n_; ++j)
        for (int i = 1; i <= m_; ++i) out.push_back(at(i, j));
    return out;
}

MatrixData MatrixData::transposed() const {
    MatrixData out(n_, m_);
    for (int i = 1; i <= m_; ++i)
        for (int j = 1; j <= n_; ++j) out.at(j, i) = at(i, j);
    return out;
}

MatrixData& MatrixData::operator+=(const MatrixData& o) {
    if (m_ != o.m_ || n_ != o.n_) throw shape_error("matrix shapes differ");
    for (size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
    return *this;
}

MatrixData operator*(const Rational& s, const MatrixData& a) {
    MatrixData out = a;
    for (auto& e : out.entries_) e *= s;
    return out;
}

MatrixData operator*(const MatrixData& a, const MatrixData& b) {
    if (a.m_ != a.n_ || b.m_ != b.n_ || a.n_ != b.m_)
        throw shape_error("matrix product requires square matrices of equal order");
    MatrixData out(a.m_, a.n_);
    for (int i = 1; i <= a.m_; ++i)
        for (int j = 1; j <= a.n_; ++j) {
            Rational acc;
            for (int k = 1; k <= a.n_; ++k) acc += a.at(i, k) * b.at(k, j);
            out.at(i, j) = acc;
        }
    return out;
}

bool operator==(const MatrixData& a, const MatrixData& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.entries_ == b.entries_;
}

int pi2_dimension(int k) {
    if (k < 0) throw shape_error("negative total degree");
    return (k + 1) * (k + 2) / 2;
}

NodeGrid grid_nodes(int m, int n) {
    if (m < 1 || n < 1) throw shape_error("grid dimensions must be positive");
    NodeGrid grid{m, n, {}};
    grid.nodes.reserve(static_cast<size_t>(m) * n);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) grid.nodes.push_back({i, j});
    return grid;
}

Rational project(const Node& node, const DirectionPair& dir) {
    return dir.alpha * Rational(node.i) + dir.beta * Rational(node.j);
}

std::optional<std::pair<Node, Node>> first_collision(const NodeGrid& grid,
                                                     const DirectionPair& dir) {
    std::map<Rational, Node> seen;
    for (const Node& node : grid.nodes) {
        auto [it, inserted] = seen.emplace(project(node, dir), node);
        if (!inserted) return std::make_pair(it->second, node);
    }
    return std::nullopt;
}

bool direction_valid(const NodeGrid& grid, const DirectionPair& dir) {
    return !first_collision(grid, dir).has_value();
}

void require_valid_direction(const NodeGrid& grid, const DirectionPair& dir) {
    if (auto hit = first_collision(grid, dir)) {
        auto [a, b] = *hit;
        std::ostringstream msg;
        msg << "direction (" << dir.alpha << ", " << dir.beta << ") projects nodes ("
            << a.i << "," << a.j << ") and (" << b.i << "," << b.j
            << ") to the same value " << project(a, dir);
        throw collision_error(msg.str(), a.i, a.j, b.i, b.j);
    }
}

} // namespace matpoly
