#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "hsym/qmod.hpp"
#include "hsym/snf.hpp"

namespace hsym {

// Finite abelian group as invariant factors n1 | n2 | ... | nr, all >= 2.
// The trivial group is the empty list.
struct AbelianPresentation {
    std::vector<std::int64_t> factors;

    AbelianPresentation() = default;
    explicit AbelianPresentation(std::vector<std::int64_t> f) : factors(std::move(f))
    {
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (factors[i] < 2) throw std::invalid_argument("invariant factor < 2");
            if (i + 1 < factors.size() && factors[i + 1] % factors[i] != 0)
                throw std::invalid_argument("factors must form a divisibility chain");
        }
    }

    int rank() const { return static_cast<int>(factors.size()); }

    std::int64_t order() const
    {
        std::int64_t o = 1;
        for (auto f : factors) o = mul64(o, f);
        return o;
    }

    bool operator==(const AbelianPresentation& o) const { return factors == o.factors; }
};

// Normalize an arbitrary list of cyclic orders (possibly with 1s, not
// necessarily a chain) to invariant factors. `to_new` maps an element given
// in the old coordinates to the new ones: new = U * old, component k taken
// mod d_k; components with d_k == 1 are dropped.
struct PresentationChange {
    AbelianPresentation pres;
    std::vector<std::int64_t> kept_factors;       // d_k > 1 in chain order
    std::vector<std::vector<std::int64_t>> u;     // full U rows (new from old)
    std::vector<std::vector<std::int64_t>> u_inv; // old from new (columns of U^-1 as rows here)

    std::vector<std::int64_t> to_new(const std::vector<std::int64_t>& old_coords) const
    {
        std::vector<std::int64_t> out;
        std::size_t kept = 0;
        for (std::size_t k = 0; k < u.size(); ++k) {
            std::int64_t acc = 0;
            for (std::size_t j = 0; j < old_coords.size(); ++j)
                acc = add64(acc, mul64(u[k][j], old_coords[j]));
            if (kept < kept_factors.size() && all_factors[k] > 1) {
                out.push_back(posmod64(acc, all_factors[k]));
                ++kept;
            }
        }
        return out;
    }

    std::vector<std::int64_t> all_factors; // full SNF diagonal including 1s
};

inline PresentationChange normalize_presentation(const std::vector<std::int64_t>& orders)
{
    const int r = static_cast<int>(orders.size());
    IntMat rel(r, r);
    for (int i = 0; i < r; ++i) {
        if (orders[static_cast<std::size_t>(i)] < 1)
            throw std::invalid_argument("cyclic order must be >= 1");
        rel.at(i, i) = orders[static_cast<std::size_t>(i)];
    }
    SnfResult s = smith_normal_form(rel);
    PresentationChange out;
    std::vector<std::int64_t> kept;
    for (int i = 0; i < r; ++i) {
        std::int64_t d = to_i64(s.d.at(i, i));
        out.all_factors.push_back(d);
        if (d > 1) kept.push_back(d);
    }
    out.kept_factors = kept;
    out.pres = AbelianPresentation(kept);
    out.u.assign(static_cast<std::size_t>(r), std::vector<std::int64_t>(static_cast<std::size_t>(r), 0));
    out.u_inv = out.u;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            out.u[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = to_i64(s.u.at(i, j));
            out.u_inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = to_i64(s.u_inv.at(i, j));
        }
    return out;
}

// A finite subgroup of the projective diagonal torus (Q/Z)^n / diagonal,
// given by explicit generators in canonical (last coordinate zero) form.
// gens[i] has exact order structure.factors[i] and the generators are
// independent modulo the diagonal.
struct FiniteDiagonalGroup {
    int n = 0;
    std::vector<TorusVec> gens;
    AbelianPresentation structure;

    std::int64_t order() const { return structure.order(); }

    // Deterministic enumeration in mixed-radix generator order.
    std::vector<TorusVec> elements(std::int64_t guard = 100000) const
    {
        if (order() > guard) throw std::runtime_error("group too large to enumerate");
        std::vector<TorusVec> out;
        out.reserve(static_cast<std::size_t>(order()));
        std::vector<std::int64_t> idx(gens.size(), 0);
        for (;;) {
            TorusVec v(n, 1);
            for (std::size_t i = 0; i < gens.size(); ++i)
                if (idx[i] != 0) v = v.plus(gens[i].scaled(idx[i]));
            out.push_back(v.canon_mod_diag());
            std::size_t k = 0;
            while (k < idx.size()) {
                if (++idx[k] < structure.factors[k]) break;
                idx[k] = 0;
                ++k;
            }
            if (k == idx.size()) break;
            if (idx.empty()) break;
        }
        return out;
    }
};

struct TorsionDualResult {
    int free_rank = 0;
    FiniteDiagonalGroup group;
};

// Solutions v in (Q/Z)^n of (row . v) = 0 for every constraint row, modulo
// the diagonal line. Rows must be zero-sum (differences of equal-degree
// exponent vectors), which puts the diagonal inside the solution torus; the
// finite part is then exactly one Z/d_i per nontrivial SNF factor, generated
// by (1/d_i) * (column i of V).
inline TorsionDualResult torsion_dual(const std::vector<std::vector<std::int64_t>>& constraints, int n)
{
    for (const auto& row : constraints) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("constraint length != n");
        std::int64_t s = 0;
        for (auto x : row) s = add64(s, x);
        if (s != 0) throw std::invalid_argument("constraint rows must be zero-sum");
    }
    IntMat a = IntMat::from_rows64(constraints, n);
    if (a.cols != n) a = IntMat(0, n);
    SnfResult s = smith_normal_form(a);

    TorsionDualResult out;
    out.free_rank = n - s.rank - 1;
    out.group.n = n;
    std::vector<std::int64_t> factors;
    for (int i = 0; i < s.rank; ++i) {
        std::int64_t d = to_i64(s.d.at(i, i));
        if (d <= 1) continue;
        TorusVec g(n, d);
        for (int j = 0; j < n; ++j) g.num[static_cast<std::size_t>(j)] = posmod64(to_i64(s.v.at(j, i) % d), d);
        g = g.canon_mod_diag();
        if (g.order() != d) throw std::logic_error("generator order drifted");
        factors.push_back(d);
        out.group.gens.push_back(std::move(g));
    }
    out.group.structure = AbelianPresentation(factors);
    return out;
}

} // namespace hsym
