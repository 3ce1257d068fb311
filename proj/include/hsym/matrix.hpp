#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "hsym/integer.hpp"

namespace hsym {

// Dense integer matrix, row-major, exact entries.
struct IntMat {
    int rows = 0;
    int cols = 0;
    std::vector<Int> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c)
    {
        if (r < 0 || c < 0) throw std::invalid_argument("negative matrix dimension");
    }

    Int& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const Int& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    static IntMat identity(int n)
    {
        IntMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static IntMat from_rows(const std::vector<std::vector<Int>>& r)
    {
        int nr = static_cast<int>(r.size());
        int nc = nr == 0 ? 0 : static_cast<int>(r[0].size());
        IntMat m(nr, nc);
        for (int i = 0; i < nr; ++i) {
            if (static_cast<int>(r[i].size()) != nc)
                throw std::invalid_argument("ragged rows");
            for (int j = 0; j < nc; ++j) m.at(i, j) = r[i][j];
        }
        return m;
    }

    static IntMat from_rows64(const std::vector<std::vector<std::int64_t>>& r, int nc_hint = -1)
    {
        int nr = static_cast<int>(r.size());
        int nc = nr == 0 ? (nc_hint < 0 ? 0 : nc_hint) : static_cast<int>(r[0].size());
        IntMat m(nr, nc);
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nc; ++j) m.at(i, j) = r[i][j];
        return m;
    }

    bool operator==(const IntMat& o) const
    {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
};

inline IntMat mul(const IntMat& x, const IntMat& y)
{
    if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch");
    IntMat z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Int& v = x.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < y.cols; ++j) z.at(i, j) += v * y.at(k, j);
        }
    return z;
}

inline bool is_diagonal(const IntMat& m)
{
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (i != j && m.at(i, j) != 0) return false;
    return true;
}

} // namespace hsym
