#include "abcov/snf.hpp"

#include <algorithm>
#include <stdexcept>

namespace abcov {

IntMat identity_matrix(std::size_t n) {
    IntMat m(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    std::size_t rows = a.size();
    std::size_t inner = b.size();
    std::size_t cols = inner ? b[0].size() : 0;
    IntMat out(rows, std::vector<Int>(cols, 0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t t = 0; t < inner; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][t] * b[t][j];
        }
    return out;
}

Int mat_det(IntMat m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    // Bareiss fraction-free elimination
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = num / prev; // exact by Bareiss
            }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

namespace {

// euclidean-style floor division quotient for the reduction steps
Int fdiv(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

struct Worker {
    IntMat a;
    IntMat u;
    IntMat v;
    std::size_t rows, cols;

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        std::swap(a[i], a[j]);
        std::swap(u[i], u[j]);
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (auto& row : a) std::swap(row[i], row[j]);
        for (auto& row : v) std::swap(row[i], row[j]);
    }
    void add_row(std::size_t dst, std::size_t src, const Int& f) { // row_dst += f * row_src
        for (std::size_t j = 0; j < cols; ++j) a[dst][j] += f * a[src][j];
        for (std::size_t j = 0; j < rows; ++j) u[dst][j] += f * u[src][j];
    }
    void add_col(std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t i = 0; i < rows; ++i) a[i][dst] += f * a[i][src];
        for (std::size_t i = 0; i < cols; ++i) v[i][dst] += f * v[i][src];
    }
    void negate_row(std::size_t i) {
        for (auto& x : a[i]) x = -x;
        for (auto& x : u[i]) x = -x;
    }
};

} // namespace

SnfResult smith_normal_form(const IntMat& m) {
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    for (const auto& r : m)
        if (r.size() != cols) throw std::invalid_argument("smith_normal_form: ragged matrix");

    Worker w{m, identity_matrix(rows), identity_matrix(cols), rows, cols};

    std::size_t t = 0;
    while (t < rows && t < cols) {
        // locate a pivot of minimal absolute value in the trailing block
        std::size_t pi = t, pj = t;
        Int best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (w.a[i][j] == 0) continue;
                Int mag = abs(w.a[i][j]);
                if (best == 0 || mag < best) {
                    best = mag;
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0) break;
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        // clear the pivot row and column with pairwise euclidean chains;
        // confining each chain to one row/column pair keeps the entries
        // from compounding across passes
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i)
                while (w.a[i][t] != 0) {
                    Int q = fdiv(w.a[i][t], w.a[t][t]);
                    w.add_row(i, t, -q);
                    if (w.a[i][t] != 0) w.swap_rows(t, i); // remainder becomes the pivot
                }
            for (std::size_t j = t + 1; j < cols; ++j)
                while (w.a[t][j] != 0) {
                    Int q = fdiv(w.a[t][j], w.a[t][t]);
                    w.add_col(j, t, -q);
                    if (w.a[t][j] != 0) {
                        w.swap_cols(t, j); // spoils the cleared column below
                        clean = false;
                    }
                }
            if (!clean) continue;
            for (std::size_t i = t + 1; i < rows && clean; ++i)
                if (w.a[i][t] != 0) clean = false;
            if (!clean) continue;
            // pivot must divide the rest of the block for the divisor chain
            for (std::size_t i = t + 1; i < rows && clean; ++i)
                for (std::size_t j = t + 1; j < cols && clean; ++j)
                    if (w.a[i][j] % w.a[t][t] != 0) {
                        w.add_row(t, i, 1);
                        clean = false;
                    }
        }
        if (w.a[t][t] < 0) w.negate_row(t);
        ++t;
    }

    SnfResult res;
    res.u = std::move(w.u);
    res.v = std::move(w.v);
    for (std::size_t i = 0; i < t; ++i) res.diag.push_back(w.a[i][i]);
    return res;
}

AbelianInvariants cokernel_invariants(const IntMat& relations, std::size_t num_generators) {
    AbelianInvariants inv;
    if (relations.empty()) {
        inv.free_rank = static_cast<long long>(num_generators);
        return inv;
    }
    SnfResult snf = smith_normal_form(relations);
    std::size_t rank = 0;
    for (const auto& d : snf.diag) {
        if (d == 0) continue;
        ++rank;
        if (d > 1) inv.torsion.push_back(d);
    }
    inv.free_rank = static_cast<long long>(num_generators) - static_cast<long long>(rank);
    return inv;
}

} // namespace abcov
