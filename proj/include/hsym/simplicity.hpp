#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "hsym/smooth.hpp"

namespace hsym {

// One block of a simple decomposition: an ordered variable tuple carrying a
// K-cycle, a T-chain, or (d = 3) a Y-configuration with parameters (a, b).
struct SimpleBlock {
    char type = 'K'; // 'K', 'T', 'Y'
    std::vector<int> vars;
    int a = 0, b = 0; // Y only; vars = x1..xa, y1..yb, z, w

    std::vector<Monomial> monomials(int d) const
    {
        std::vector<Monomial> out;
        auto pw = [&](int i, int e, int j) {
            Monomial m;
            m.e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(e);
            if (j >= 0) m.e[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(m.e[static_cast<std::size_t>(j)] + 1);
            return m;
        };
        const auto& v = vars;
        if (type == 'K') {
            int k = static_cast<int>(v.size());
            for (int i = 0; i < k; ++i)
                out.push_back(pw(v[static_cast<std::size_t>(i)], d - 1, v[static_cast<std::size_t>((i + 1) % k)]));
        } else if (type == 'T') {
            int k = static_cast<int>(v.size());
            for (int i = 0; i + 1 < k; ++i)
                out.push_back(pw(v[static_cast<std::size_t>(i)], d - 1, v[static_cast<std::size_t>(i + 1)]));
            out.push_back(pw(v[static_cast<std::size_t>(k - 1)], d, -1));
        } else {
            int z = v[static_cast<std::size_t>(a + b)], w = v[static_cast<std::size_t>(a + b + 1)];
            for (int i = 0; i + 1 < a; ++i) out.push_back(pw(v[static_cast<std::size_t>(i)], 2, v[static_cast<std::size_t>(i + 1)]));
            for (int i = 0; i + 1 < b; ++i) out.push_back(pw(v[static_cast<std::size_t>(a + i)], 2, v[static_cast<std::size_t>(a + i + 1)]));
            out.push_back(pw(v[static_cast<std::size_t>(a - 1)], 2, z));
            out.push_back(pw(v[static_cast<std::size_t>(a + b - 1)], 2, z));
            out.push_back(pw(z, 2, w));
            out.push_back(pw(w, 3, -1));
            Monomial xyw;
            xyw.e[static_cast<std::size_t>(v[static_cast<std::size_t>(a - 1)])] = 1;
            xyw.e[static_cast<std::size_t>(v[static_cast<std::size_t>(a + b - 1)])] =
                static_cast<std::uint8_t>(xyw.e[static_cast<std::size_t>(v[static_cast<std::size_t>(a + b - 1)])] + 1);
            xyw.e[static_cast<std::size_t>(w)] = 1;
            out.push_back(xyw);
        }
        return out;
    }
};

struct SimpleDecomposition {
    std::vector<SimpleBlock> blocks;

    SparsePoly polynomial(int d, int n) const
    {
        std::vector<std::pair<Monomial, std::int64_t>> ts;
        for (const auto& b : blocks)
            for (const auto& m : b.monomials(d)) ts.emplace_back(m, 1);
        return SparsePoly::of(d, n, std::move(ts));
    }
};

// Exhaustive search for a partition of [n] into typed blocks whose defining
// monomials all lie in S. Deterministic: fewer blocks first, then a fixed
// lexicographic candidate order (K before T before Y, smaller blocks first).
inline std::optional<SimpleDecomposition> find_simple_decomposition(const Support& s)
{
    const int n = s.n;
    const int d = s.d;

    std::vector<SimpleBlock> blocks;
    std::vector<char> used(static_cast<std::size_t>(n), 0);

    auto block_in_s = [&](const SimpleBlock& b) {
        for (const auto& m : b.monomials(d))
            if (!s.contains(m)) return false;
        return true;
    };

    // Ordered tuples of the given size from the unused variables that
    // include `anchor`; lexicographic by the tuple.
    auto for_tuples = [&](int size, int anchor, auto&& fn) -> bool {
        std::vector<int> pool;
        for (int i = 0; i < n; ++i)
            if (!used[static_cast<std::size_t>(i)]) pool.push_back(i);
        std::vector<int> tup(static_cast<std::size_t>(size));
        std::vector<char> taken(pool.size(), 0);
        auto rec = [&](auto&& self, int pos) -> bool {
            if (pos == size) {
                if (std::find(tup.begin(), tup.end(), anchor) == tup.end()) return false;
                return fn(tup);
            }
            for (std::size_t t = 0; t < pool.size(); ++t) {
                if (taken[t]) continue;
                taken[t] = 1;
                tup[static_cast<std::size_t>(pos)] = pool[t];
                if (self(self, pos + 1)) return true;
                taken[t] = 0;
            }
            return false;
        };
        return rec(rec, 0);
    };

    int target_blocks = 0;
    auto dfs = [&](auto&& self) -> bool {
        int anchor = -1;
        for (int i = 0; i < n; ++i)
            if (!used[static_cast<std::size_t>(i)]) {
                anchor = i;
                break;
            }
        if (anchor < 0) return static_cast<int>(blocks.size()) == target_blocks;
        if (static_cast<int>(blocks.size()) >= target_blocks) return false;

        int free_count = 0;
        for (int i = 0; i < n; ++i)
            if (!used[static_cast<std::size_t>(i)]) ++free_count;

        auto try_block = [&](SimpleBlock b) -> bool {
            if (!block_in_s(b)) return false;
            for (int v : b.vars) used[static_cast<std::size_t>(v)] = 1;
            blocks.push_back(b);
            if (self(self)) return true;
            blocks.pop_back();
            for (int v : b.vars) used[static_cast<std::size_t>(v)] = 0;
            return false;
        };

        // K-cycles: rotation-invariant, so anchor the smallest variable first.
        for (int k = 1; k <= free_count; ++k) {
            if (for_tuples(k, anchor, [&](const std::vector<int>& tup) {
                    if (tup[0] != anchor) return false;
                    SimpleBlock b;
                    b.type = 'K';
                    b.vars = tup;
                    return try_block(b);
                }))
                return true;
        }
        for (int k = 1; k <= free_count; ++k) {
            if (for_tuples(k, anchor, [&](const std::vector<int>& tup) {
                    SimpleBlock b;
                    b.type = 'T';
                    b.vars = tup;
                    return try_block(b);
                }))
                return true;
        }
        if (d == 3) {
            for (int size = 4; size <= free_count; ++size)
                for (int a = size - 3; a >= 1; --a) {
                    int b = size - 2 - a;
                    if (b < 1 || b > a) continue; // report with a >= b
                    if (for_tuples(size, anchor, [&](const std::vector<int>& tup) {
                            SimpleBlock blk;
                            blk.type = 'Y';
                            blk.vars = tup;
                            blk.a = a;
                            blk.b = b;
                            return try_block(blk);
                        }))
                        return true;
                }
        }
        return false;
    };

    for (target_blocks = 1; target_blocks <= n; ++target_blocks) {
        blocks.clear();
        std::fill(used.begin(), used.end(), 0);
        if (dfs(dfs)) {
            SimpleDecomposition out;
            out.blocks = blocks;
            return out;
        }
    }
    return std::nullopt;
}

} // namespace hsym
