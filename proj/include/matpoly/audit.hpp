#pragma once

#include <string>
#include <utility>
#include <vector>

#include "matpoly/rational.hpp"

namespace matpoly {

/// Dense integer matrix (0-based), entries arbitrary-precision.
class IntMatrix {
public:
    IntMatrix(int rows, int cols);
    static IntMatrix identity(int order);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const BigInt& operator()(int r, int c) const { return a_[idx(r, c)]; }
    BigInt& operator()(int r, int c) { return a_[idx(r, c)]; }

private:
    size_t idx(int r, int c) const { return static_cast<size_t>(r) * cols_ + c; }
    int rows_, cols_;
    std::vector<BigInt> a_;
};

/// Monomial exponent pairs (a, b) with a + b <= k in graded-lex order; the
/// basis of the total-degree-k space. Length is pi2_dimension(k).
std::vector<std::pair<int, int>> monomial_basis(int k);

/// All ordered factorizations (m, n) of pi2_dimension(k), ascending in m;
/// the rectangular grids whose size matches the space dimension.
std::vector<std::pair<int, int>> grid_factorizations(int k);

/// Sample matrix of the monomial basis on the m x n grid: rows are nodes in
/// row-major order, columns the monomials; entry (r,c) = i^a * j^b. Requires
/// m*n = pi2_dimension(k).
struct SampleMatrix {
    int k = 0;
    int m = 0;
    int n = 0;
    int order = 0;
    IntMatrix mat;
};

SampleMatrix build_sample_matrix(int m, int n, int k);

/// Fraction-free (Bareiss) determinant; all intermediate divisions exact.
BigInt determinant_bareiss(const IntMatrix& mat);

/// Modular determinant: residues mod 31-bit primes combined by CRT until the
/// prime product exceeds twice the Hadamard bound, which certifies the
/// result.
BigInt determinant_modular(const IntMatrix& mat);

/// Engine dispatch: Bareiss up to order 30, modular CRT above (entry growth
/// makes Bareiss the bottleneck on larger orders).
BigInt exact_determinant(const IntMatrix& mat);

struct AuditCase {
    int k = 0;
    int m = 0;
    int n = 0;
    int order = 0;
    BigInt det;
    bool singular = false;
    bool mod_certified = false; // determinant came from the modular engine
    long long millis = 0;
};

struct AuditReport {
    int k_max = 0;
    std::vector<AuditCase> cases; // ordered by (k, m, n)
};

/// Evaluates every (k, m, n) case for 1 <= k <= k_max. `threads` <= 0 uses
/// the hardware concurrency; cases are independent and the report order is
/// deterministic regardless of scheduling.
AuditReport audit_nonpoisedness(int k_max, int threads = 0);

/// CSV rendering: header plus one row per case
/// (k,m,n,order,determinant,verdict[,millis]).
std::string audit_report_csv(const AuditReport& report, bool include_millis);

} // namespace matpoly
