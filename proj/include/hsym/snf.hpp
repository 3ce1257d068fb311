#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "hsym/matrix.hpp"

namespace hsym {

// Smith normal form U*A*V = D with U, V unimodular and d1 | d2 | ... >= 0 on
// the diagonal. The inverses are tracked alongside (every elementary step has
// a trivial inverse), so callers can reconstruct A = Uinv*D*Vinv exactly.
//
// Pivot rule is fixed for reproducibility: smallest nonzero absolute value in
// the trailing block, first hit in row-major order.
struct SnfResult {
    IntMat u, d, v;
    IntMat u_inv, v_inv;
    int rank = 0;
    std::vector<Int> diagonal() const
    {
        std::vector<Int> out;
        int n = std::min(d.rows, d.cols);
        for (int i = 0; i < n; ++i) out.push_back(d.at(i, i));
        return out;
    }
};

namespace detail {

inline void row_swap(IntMat& m, int i, int j)
{
    for (int k = 0; k < m.cols; ++k) std::swap(m.at(i, k), m.at(j, k));
}
inline void col_swap(IntMat& m, int i, int j)
{
    for (int k = 0; k < m.rows; ++k) std::swap(m.at(k, i), m.at(k, j));
}
inline void row_addmul(IntMat& m, int dst, int src, const Int& f)
{
    for (int k = 0; k < m.cols; ++k) m.at(dst, k) += f * m.at(src, k);
}
inline void col_addmul(IntMat& m, int dst, int src, const Int& f)
{
    for (int k = 0; k < m.rows; ++k) m.at(k, dst) += f * m.at(k, src);
}
inline void row_negate(IntMat& m, int i)
{
    for (int k = 0; k < m.cols; ++k) m.at(i, k) = -m.at(i, k);
}
inline void col_negate(IntMat& m, int i)
{
    for (int k = 0; k < m.rows; ++k) m.at(k, i) = -m.at(k, i);
}

} // namespace detail

inline SnfResult smith_normal_form(const IntMat& a)
{
    using namespace detail;
    SnfResult r;
    r.d = a;
    r.u = IntMat::identity(a.rows);
    r.u_inv = IntMat::identity(a.rows);
    r.v = IntMat::identity(a.cols);
    r.v_inv = IntMat::identity(a.cols);
    IntMat& d = r.d;

    const int nmin = std::min(a.rows, a.cols);

    // Elementary ops and their mirrored inverses.
    auto swap_rows = [&](int i, int j) {
        if (i == j) return;
        row_swap(d, i, j);
        row_swap(r.u, i, j);
        col_swap(r.u_inv, i, j);
    };
    auto swap_cols = [&](int i, int j) {
        if (i == j) return;
        col_swap(d, i, j);
        col_swap(r.v, i, j);
        row_swap(r.v_inv, i, j);
    };
    auto add_row = [&](int dst, int src, const Int& f) { // row dst += f * row src
        row_addmul(d, dst, src, f);
        row_addmul(r.u, dst, src, f);
        col_addmul(r.u_inv, src, dst, -f);
    };
    auto add_col = [&](int dst, int src, const Int& f) {
        col_addmul(d, dst, src, f);
        col_addmul(r.v, dst, src, f);
        row_addmul(r.v_inv, src, dst, -f);
    };
    auto negate_row = [&](int i) {
        row_negate(d, i);
        row_negate(r.u, i);
        col_negate(r.u_inv, i);
    };

    auto lone = [&](int s) {
        for (int i = s + 1; i < d.rows; ++i)
            if (d.at(i, s) != 0) return false;
        for (int j = s + 1; j < d.cols; ++j)
            if (d.at(s, j) != 0) return false;
        return true;
    };
    auto locate_pivot = [&](int s, int& pi, int& pj) {
        Int best = 0;
        pi = -1;
        for (int i = s; i < d.rows; ++i)
            for (int j = s; j < d.cols; ++j) {
                if (d.at(i, j) == 0) continue;
                Int v = abs_int(d.at(i, j));
                if (pi < 0 || v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        return pi >= 0;
    };

    for (int s = 0; s < nmin; ++s) {
        for (;;) {
            int pi, pj;
            if (!locate_pivot(s, pi, pj)) break; // trailing block is zero
            swap_rows(s, pi);
            swap_cols(s, pj);

            if (!lone(s)) {
                for (int i = s + 1; i < d.rows; ++i) {
                    if (d.at(i, s) == 0) continue;
                    Int q = d.at(i, s) / d.at(s, s);
                    add_row(i, s, -q);
                }
                for (int j = s + 1; j < d.cols; ++j) {
                    if (d.at(s, j) == 0) continue;
                    Int q = d.at(s, j) / d.at(s, s);
                    add_col(j, s, -q);
                }
                continue; // remainders may survive; re-pivot and repeat
            }

            // Divisibility fixup: the pivot must divide the trailing block.
            int bi = -1;
            for (int i = s + 1; i < d.rows && bi < 0; ++i)
                for (int j = s + 1; j < d.cols; ++j)
                    if (d.at(i, j) % d.at(s, s) != 0) {
                        bi = i;
                        break;
                    }
            if (bi < 0) break;
            add_row(s, bi, 1);
        }
        if (s < std::min(d.rows, d.cols) && d.at(s, s) < 0) negate_row(s);
    }

    for (int s = 0; s < nmin; ++s)
        if (d.at(s, s) != 0) r.rank = s + 1;
    return r;
}

// Invariant-factor decomposition of Z^cols / row-lattice(A).
struct QuotientStructure {
    int free_rank = 0;
    std::vector<Int> torsion; // factors > 1, each dividing the next
};

inline QuotientStructure quotient_structure(const IntMat& a)
{
    SnfResult s = smith_normal_form(a);
    QuotientStructure q;
    q.free_rank = a.cols - s.rank;
    for (const Int& d : s.diagonal())
        if (d > 1) q.torsion.push_back(d);
    return q;
}

// One integer solution of A z = b, if any (all solutions differ by the
// right kernel).
inline std::optional<std::vector<Int>> solve_linear(const IntMat& a, const std::vector<Int>& b)
{
    if (static_cast<int>(b.size()) != a.rows) throw std::invalid_argument("rhs length mismatch");
    SnfResult s = smith_normal_form(a);
    std::vector<Int> c(static_cast<std::size_t>(a.rows));
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.rows; ++j) c[static_cast<std::size_t>(i)] += s.u.at(i, j) * b[static_cast<std::size_t>(j)];
    std::vector<Int> w(static_cast<std::size_t>(a.cols));
    const int nmin = std::min(a.rows, a.cols);
    for (int i = 0; i < a.rows; ++i) {
        Int di = i < nmin ? s.d.at(i, i) : Int(0);
        if (di == 0) {
            if (c[static_cast<std::size_t>(i)] != 0) return std::nullopt;
        } else {
            if (c[static_cast<std::size_t>(i)] % di != 0) return std::nullopt;
            w[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)] / di;
        }
    }
    std::vector<Int> z(static_cast<std::size_t>(a.cols));
    for (int i = 0; i < a.cols; ++i)
        for (int j = 0; j < a.cols; ++j) z[static_cast<std::size_t>(i)] += s.v.at(i, j) * w[static_cast<std::size_t>(j)];
    return z;
}

// Basis rows of the right kernel {x : A x = 0}.
inline std::vector<std::vector<Int>> integer_kernel(const IntMat& a)
{
    SnfResult s = smith_normal_form(a);
    std::vector<std::vector<Int>> basis;
    for (int j = s.rank; j < a.cols; ++j) {
        std::vector<Int> col(a.cols);
        for (int i = 0; i < a.cols; ++i) col[i] = s.v.at(i, j);
        basis.push_back(std::move(col));
    }
    return basis;
}

} // namespace hsym
