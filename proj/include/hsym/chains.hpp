#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hsym/digraph.hpp"

namespace hsym {

// Longest chain of indices (i_1, ..., i_s) with consecutive arrows, a closing
// arrow (i_s, i_{s-c}), and pairwise-distinct weights; s maximal first, then
// c minimal, witness lexicographically smallest among the optima.
struct ChainInvariants {
    int s = 0;
    int c = 0;
    std::vector<int> witness; // 0-based vertex sequence of length s
};

struct NoFrameEdgeError : std::runtime_error {
    int vertex; // 0-based
    explicit NoFrameEdgeError(int v)
        : std::runtime_error("small support: no frame edge at vertex " + std::to_string(v + 1)), vertex(v)
    {
    }
};

// lam_class[i] == lam_class[j] iff the i-th and j-th weights coincide as
// characters.
inline ChainInvariants chain_invariants_core(const DirectedGraph& g, const std::vector<int>& lam_class)
{
    const int n = g.n;
    for (int i = 0; i < n; ++i)
        if (g.outdeg(i) == 0) throw NoFrameEdgeError(i);

    ChainInvariants best;
    bool have = false;
    std::vector<int> chain;
    std::vector<char> used_vertex(static_cast<std::size_t>(n), 0);
    std::vector<char> used_class(static_cast<std::size_t>(n), 0);

    auto consider = [&]() {
        const int s = static_cast<int>(chain.size());
        int tail = chain.back();
        for (int c = 0; c <= s - 1; ++c) {
            if (!g.has(tail, chain[static_cast<std::size_t>(s - 1 - c)])) continue;
            bool better = !have;
            if (have) {
                if (s != best.s) better = s > best.s;
                else if (c != best.c) better = c < best.c;
                else better = chain < best.witness;
            }
            if (better) {
                best.s = s;
                best.c = c;
                best.witness = chain;
                have = true;
            }
        }
    };

    auto rec = [&](auto&& self) -> void {
        consider();
        int tail = chain.back();
        for (int j : g.out(tail)) {
            if (used_vertex[static_cast<std::size_t>(j)] || used_class[static_cast<std::size_t>(lam_class[static_cast<std::size_t>(j)])])
                continue;
            used_vertex[static_cast<std::size_t>(j)] = 1;
            used_class[static_cast<std::size_t>(lam_class[static_cast<std::size_t>(j)])] = 1;
            chain.push_back(j);
            self(self);
            chain.pop_back();
            used_vertex[static_cast<std::size_t>(j)] = 0;
            used_class[static_cast<std::size_t>(lam_class[static_cast<std::size_t>(j)])] = 0;
        }
    };

    for (int i = 0; i < n; ++i) {
        used_vertex[static_cast<std::size_t>(i)] = 1;
        used_class[static_cast<std::size_t>(lam_class[static_cast<std::size_t>(i)])] = 1;
        chain.assign(1, i);
        rec(rec);
        used_vertex[static_cast<std::size_t>(i)] = 0;
        used_class[static_cast<std::size_t>(lam_class[static_cast<std::size_t>(i)])] = 0;
    }
    if (!have) throw std::logic_error("no chain found despite full out-degrees");
    return best;
}

} // namespace hsym
