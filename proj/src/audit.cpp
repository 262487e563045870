#include "matpoly/audit.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <sstream>
#include <thread>

#include "matpoly/core.hpp"

namespace matpoly {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) throw shape_error("matrix dimensions must be positive");
    a_.resize(static_cast<size_t>(rows) * cols);
}

IntMatrix IntMatrix::identity(int order) {
    IntMatrix out(order, order);
    for (int i = 0; i < order; ++i) out(i, i) = 1;
    return out;
}

std::vector<std::pair<int, int>> monomial_basis(int k) {
    if (k < 0) throw shape_error("negative total degree");
    std::vector<std::pair<int, int>> basis;
    basis.reserve(pi2_dimension(k));
    for (int deg = 0; deg <= k; ++deg)
        for (int a = deg; a >= 0; --a) basis.emplace_back(a, deg - a);
    return basis;
}

std::vector<std::pair<int, int>> grid_factorizations(int k) {
    if (k < 1) throw shape_error("grid factorizations need k >= 1");
    int size = pi2_dimension(k);
    std::vector<std::pair<int, int>> out;
    for (int m = 1; m <= size; ++m)
        if (size % m == 0) out.emplace_back(m, size / m);
    return out;
}

SampleMatrix build_sample_matrix(int m, int n, int k) {
    if (m < 1 || n < 1) throw shape_error("grid dimensions must be positive");
    int order = pi2_dimension(k);
    if (m * n != order) throw shape_error("grid size does not match the space dimension");
    auto basis = monomial_basis(k);
    SampleMatrix sample{k, m, n, order, IntMatrix(order, order)};
    int r = 0;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j, ++r)
            for (int c = 0; c < order; ++c) {
                BigInt xi, yj;
                mpz_ui_pow_ui(xi.get_mpz_t(), static_cast<unsigned long>(i),
                              static_cast<unsigned long>(basis[c].first));
                mpz_ui_pow_ui(yj.get_mpz_t(), static_cast<unsigned long>(j),
                              static_cast<unsigned long>(basis[c].second));
                sample.mat(r, c) = xi * yj;
            }
    return sample;
}

BigInt determinant_bareiss(const IntMatrix& mat) {
    if (mat.rows() != mat.cols()) throw shape_error("determinant of non-square matrix");
    int n = mat.rows();
    IntMatrix w = mat;
    int sign = 1;
    BigInt prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r)
            if (w(r, k) != 0) { pivot = r; break; }
        if (pivot < 0) return 0;
        if (pivot != k) {
            for (int c = k; c < n; ++c) mpz_swap(w(pivot, c).get_mpz_t(), w(k, c).get_mpz_t());
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r) {
            for (int c = k + 1; c < n; ++c) {
                BigInt num = w(k, k) * w(r, c) - w(r, k) * w(k, c);
                mpz_divexact(w(r, c).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            w(r, k) = 0;
        }
        prev = w(k, k);
    }
    BigInt det = w(n - 1, n - 1);
    return sign < 0 ? BigInt(-det) : det;
}

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t p) {
    uint64_t acc = 1 % p;
    while (exp) {
        if (exp & 1) acc = mulmod_u64(acc, base, p);
        base = mulmod_u64(base, base, p);
        exp >>= 1;
    }
    return acc;
}

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % small == 0) return n == small;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (uint64_t base : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u64(base % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

// det mod p by Gaussian elimination over Z/p. p must be an odd prime below
// 2^31 so products fit in 64 bits.
uint64_t det_mod_p(const IntMatrix& mat, uint64_t p) {
    int n = mat.rows();
    std::vector<uint64_t> w(static_cast<size_t>(n) * n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            w[static_cast<size_t>(r) * n + c] = mpz_fdiv_ui(mat(r, c).get_mpz_t(), p);
    uint64_t det = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (w[static_cast<size_t>(r) * n + col] != 0) { pivot = r; break; }
        if (pivot < 0) return 0;
        if (pivot != col) {
            for (int c = col; c < n; ++c)
                std::swap(w[static_cast<size_t>(pivot) * n + c], w[static_cast<size_t>(col) * n + c]);
            det = p - det; // sign flip
            if (det == p) det = 0;
        }
        uint64_t pv = w[static_cast<size_t>(col) * n + col];
        det = mulmod_u64(det, pv, p);
        uint64_t inv = powmod_u64(pv, p - 2, p);
        for (int r = col + 1; r < n; ++r) {
            uint64_t lead = w[static_cast<size_t>(r) * n + col];
            if (lead == 0) continue;
            uint64_t f = mulmod_u64(lead, inv, p);
            for (int c = col; c < n; ++c) {
                uint64_t sub = mulmod_u64(f, w[static_cast<size_t>(col) * n + c], p);
                uint64_t& cell = w[static_cast<size_t>(r) * n + c];
                cell = cell >= sub ? cell - sub : cell + p - sub;
            }
        }
    }
    return det;
}

// ceil(sqrt(prod_r sum_c a_rc^2)): Hadamard bound on |det|.
BigInt hadamard_bound(const IntMatrix& mat) {
    int n = mat.rows();
    BigInt prod = 1;
    for (int r = 0; r < n; ++r) {
        BigInt norm2 = 0;
        for (int c = 0; c < n; ++c) norm2 += mat(r, c) * mat(r, c);
        if (norm2 == 0) return 0;
        prod *= norm2;
    }
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), prod.get_mpz_t());
    return root + 1;
}

} // namespace

BigInt determinant_modular(const IntMatrix& mat) {
    if (mat.rows() != mat.cols()) throw shape_error("determinant of non-square matrix");
    BigInt bound = hadamard_bound(mat);
    if (bound == 0) return 0;
    BigInt needed = 2 * bound + 1;

    BigInt value = 0;   // det mod product, in [0, product)
    BigInt product = 1;
    uint64_t candidate = (1ull << 31) - 1;
    while (product < needed) {
        while (!is_prime_u64(candidate)) candidate -= 2;
        uint64_t p = candidate;
        candidate -= 2;
        uint64_t residue = det_mod_p(mat, p);
        // CRT: value' = value + product * ((residue - value) * product^-1 mod p)
        BigInt pz(static_cast<unsigned long>(p));
        uint64_t value_mod_p = mpz_fdiv_ui(value.get_mpz_t(), p);
        uint64_t prod_mod_p = mpz_fdiv_ui(product.get_mpz_t(), p);
        uint64_t diff = residue >= value_mod_p ? residue - value_mod_p : residue + p - value_mod_p;
        uint64_t lift = mulmod_u64(diff, powmod_u64(prod_mod_p, p - 2, p), p);
        value += product * BigInt(static_cast<unsigned long>(lift));
        product *= pz;
    }
    if (2 * value > product) value -= product;
    return value;
}

BigInt exact_determinant(const IntMatrix& mat) {
    if (mat.rows() != mat.cols()) throw shape_error("determinant of non-square matrix");
    return mat.rows() <= 30 ? determinant_bareiss(mat) : determinant_modular(mat);
}

AuditReport audit_nonpoisedness(int k_max, int threads) {
    if (k_max < 1) throw shape_error("audit needs k_max >= 1");
    AuditReport report;
    report.k_max = k_max;
    for (int k = 1; k <= k_max; ++k)
        for (auto [m, n] : grid_factorizations(k))
            report.cases.push_back(AuditCase{k, m, n, pi2_dimension(k), BigInt(0), false, false, 0});

    if (threads <= 0) {
        unsigned hw = std::thread::hardware_concurrency();
        threads = hw == 0 ? 1 : static_cast<int>(hw);
    }
    threads = std::min<int>(threads, static_cast<int>(report.cases.size()));

    std::atomic<size_t> next{0};
    auto worker = [&report, &next]() {
        for (;;) {
            size_t idx = next.fetch_add(1);
            if (idx >= report.cases.size()) return;
            AuditCase& item = report.cases[idx];
            auto start = std::chrono::steady_clock::now();
            SampleMatrix sample = build_sample_matrix(item.m, item.n, item.k);
            item.mod_certified = sample.order > 30;
            item.det = exact_determinant(sample.mat);
            item.singular = item.det == 0;
            auto stop = std::chrono::steady_clock::now();
            item.millis =
                std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return report;
}

std::string audit_report_csv(const AuditReport& report, bool include_millis) {
    std::ostringstream out;
    out << "k,m,n,order,determinant,verdict";
    if (include_millis) out << ",millis";
    out << '\n';
    for (const AuditCase& item : report.cases) {
        out << item.k << ',' << item.m << ',' << item.n << ',' << item.order << ',';
        if (item.singular && item.mod_certified)
            out << "0 (mod-certified)";
        else
            out << item.det.get_str();
        out << ',' << (item.singular ? "singular" : "nonsingular");
        if (include_millis) out << ',' << item.millis;
        out << '\n';
    }
    return out.str();
}

} // namespace matpoly
