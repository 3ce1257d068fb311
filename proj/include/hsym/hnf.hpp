#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hsym/integer.hpp"

namespace hsym {

// Integer lattice in Z^n kept in row Hermite normal form: rows sorted by
// pivot column, pivots positive, entries above each pivot reduced into
// [0, pivot). The HNF is the canonical representation of the lattice, so
// key() is usable for hashing and deduplication.
//
// Entries stay tiny for this artifact (differences of exponent vectors and
// their reductions); arithmetic is checked and a throw means a logic error.
class Lattice {
  public:
    explicit Lattice(int n) : n_(n) {}

    int dim() const { return n_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<std::int64_t>>& rows() const { return rows_; }

    // Insert v into the lattice; returns true if the lattice grew.
    bool add(std::vector<std::int64_t> v)
    {
        bool changed = false;
        std::size_t r = 0;
        int col = lead(v);
        while (col < n_) {
            while (r < rows_.size() && pivot_col(r) < col) ++r;
            if (r == rows_.size() || pivot_col(r) > col) {
                normalize_sign(v);
                rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(r), std::move(v));
                changed = true;
                reduce_above();
                return true;
            }
            auto& row = rows_[r];
            std::int64_t a = row[static_cast<std::size_t>(col)];
            std::int64_t b = v[static_cast<std::size_t>(col)];
            if (b % a == 0) {
                std::int64_t q = b / a;
                for (int k = 0; k < n_; ++k)
                    v[static_cast<std::size_t>(k)] = sub64(v[static_cast<std::size_t>(k)], mul64(q, row[static_cast<std::size_t>(k)]));
            } else {
                std::int64_t x, y;
                std::int64_t g = xgcd64(a, b, x, y);
                std::vector<std::int64_t> merged(static_cast<std::size_t>(n_));
                for (int k = 0; k < n_; ++k)
                    merged[static_cast<std::size_t>(k)] =
                        add64(mul64(x, row[static_cast<std::size_t>(k)]), mul64(y, v[static_cast<std::size_t>(k)]));
                std::int64_t af = a / g, bf = b / g;
                for (int k = 0; k < n_; ++k)
                    v[static_cast<std::size_t>(k)] =
                        sub64(mul64(af, v[static_cast<std::size_t>(k)]), mul64(bf, row[static_cast<std::size_t>(k)]));
                row = std::move(merged);
                changed = true;
            }
            col = lead(v);
        }
        if (changed) reduce_above();
        return changed;
    }

    bool contains(std::vector<std::int64_t> v) const
    {
        std::size_t r = 0;
        int col = lead(v);
        while (col < n_) {
            while (r < rows_.size() && pivot_col(r) < col) ++r;
            if (r == rows_.size() || pivot_col(r) > col) return false;
            const auto& row = rows_[r];
            std::int64_t a = row[static_cast<std::size_t>(col)];
            std::int64_t b = v[static_cast<std::size_t>(col)];
            if (b % a != 0) return false;
            std::int64_t q = b / a;
            for (int k = col; k < n_; ++k)
                v[static_cast<std::size_t>(k)] = sub64(v[static_cast<std::size_t>(k)], mul64(q, row[static_cast<std::size_t>(k)]));
            col = lead(v);
        }
        return true;
    }

    // Reduce v modulo the lattice to the canonical coset representative
    // (entries over pivot columns brought into [0, pivot)).
    std::vector<std::int64_t> reduce(std::vector<std::int64_t> v) const
    {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            int p = pivot_col(r);
            std::int64_t a = rows_[r][static_cast<std::size_t>(p)];
            std::int64_t q = v[static_cast<std::size_t>(p)] >= 0 ? v[static_cast<std::size_t>(p)] / a
                                                                 : -((-v[static_cast<std::size_t>(p)] + a - 1) / a);
            if (q != 0)
                for (int k = 0; k < n_; ++k)
                    v[static_cast<std::size_t>(k)] = sub64(v[static_cast<std::size_t>(k)], mul64(q, rows_[r][static_cast<std::size_t>(k)]));
        }
        return v;
    }

    std::string key() const
    {
        std::string s = std::to_string(n_) + ";";
        for (const auto& row : rows_) {
            for (auto x : row) s += std::to_string(x) + ",";
            s += ";";
        }
        return s;
    }

    bool operator==(const Lattice& o) const { return n_ == o.n_ && rows_ == o.rows_; }

  private:
    int lead(const std::vector<std::int64_t>& v) const
    {
        int i = 0;
        while (i < n_ && v[static_cast<std::size_t>(i)] == 0) ++i;
        return i;
    }

    int pivot_col(std::size_t r) const
    {
        int i = 0;
        while (v_at(r, i) == 0) ++i;
        return i;
    }

    std::int64_t v_at(std::size_t r, int c) const { return rows_[r][static_cast<std::size_t>(c)]; }

    void normalize_sign(std::vector<std::int64_t>& v) const
    {
        int p = lead(v);
        if (p < n_ && v[static_cast<std::size_t>(p)] < 0)
            for (auto& x : v) x = -x;
    }

    // Bring entries above every pivot into [0, pivot). Ascending pivot order
    // is stable: a later row has leading zeros at all earlier pivot columns.
    void reduce_above()
    {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            int p = pivot_col(r);
            std::int64_t a = rows_[r][static_cast<std::size_t>(p)];
            for (std::size_t s = 0; s < r; ++s) {
                std::int64_t x = rows_[s][static_cast<std::size_t>(p)];
                std::int64_t q = x >= 0 ? x / a : -((-x + a - 1) / a);
                if (q != 0)
                    for (int k = 0; k < n_; ++k)
                        rows_[s][static_cast<std::size_t>(k)] =
                            sub64(rows_[s][static_cast<std::size_t>(k)], mul64(q, rows_[r][static_cast<std::size_t>(k)]));
            }
        }
    }

    int n_;
    std::vector<std::vector<std::int64_t>> rows_;
};

inline Lattice lattice_from_rows(int n, const std::vector<std::vector<std::int64_t>>& rows)
{
    Lattice l(n);
    for (const auto& r : rows) l.add(r);
    return l;
}

} // namespace hsym
