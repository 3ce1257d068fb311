#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "hsym/monomial.hpp"

namespace hsym {

// Directed graph on vertices 0..n-1 with an arrow (i, j) whenever
// x_i^{d-1} x_j lies in the support. Self-loops come from pure powers x_i^d.
struct DirectedGraph {
    int n = 0;
    std::vector<std::pair<int, int>> arrows; // sorted

    bool has(int i, int j) const
    {
        return std::binary_search(arrows.begin(), arrows.end(), std::make_pair(i, j));
    }

    std::vector<int> out(int i) const
    {
        std::vector<int> o;
        for (const auto& [a, b] : arrows)
            if (a == i) o.push_back(b);
        return o;
    }

    int outdeg(int i) const
    {
        int c = 0;
        for (const auto& [a, b] : arrows)
            if (a == i) ++c;
        return c;
    }

    bool operator==(const DirectedGraph& o) const { return n == o.n && arrows == o.arrows; }
};

inline DirectedGraph edge_graph(const Support& s)
{
    DirectedGraph g;
    g.n = s.n;
    for (const auto& m : s.mons) {
        int hi = -1, lo = -1;
        bool shaped = true;
        for (int i = 0; i < s.n && shaped; ++i) {
            int k = m.e[static_cast<std::size_t>(i)];
            if (k == 0) continue;
            if (k == s.d) { hi = i; lo = i; }          // x_i^d -> self-loop
            else if (k == s.d - 1) { if (hi >= 0) shaped = false; else hi = i; }
            else if (k == 1) { if (lo >= 0) shaped = false; else lo = i; }
            else shaped = false;
        }
        if (shaped && hi >= 0 && lo >= 0) g.arrows.emplace_back(hi, lo);
    }
    std::sort(g.arrows.begin(), g.arrows.end());
    g.arrows.erase(std::unique(g.arrows.begin(), g.arrows.end()), g.arrows.end());
    return g;
}

// Monomial x_i^{d-1} x_j (the arrow (i, j) written back as a monomial).
inline Monomial arrow_monomial(int i, int j, int d)
{
    Monomial m;
    if (i == j) {
        m.e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(d);
    } else {
        m.e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(d - 1);
        m.e[static_cast<std::size_t>(j)] = 1;
    }
    return m;
}

// All maps [n] -> [n] as frames, optionally one representative per
// S_n-conjugacy class of functional graphs (canonical form = minimum of
// sigma . f . sigma^{-1} over all sigma, as a tuple).
inline std::vector<std::vector<int>> enumerate_frames(int d, int n, bool up_to_conjugacy = false)
{
    if (d < 2 || n < 1) throw std::invalid_argument("enumerate_frames: bad (d, n)");
    std::vector<std::vector<int>> perms;
    if (up_to_conjugacy) {
        std::vector<int> p(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
        do perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
    }

    std::set<std::vector<int>> reps;
    std::vector<std::vector<int>> out;
    std::vector<int> f(static_cast<std::size_t>(n), 0);
    std::vector<int> conj(static_cast<std::size_t>(n));
    for (;;) {
        if (!up_to_conjugacy) {
            out.push_back(f);
        } else {
            std::vector<int> best = f;
            for (const auto& p : perms) {
                for (int i = 0; i < n; ++i) conj[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])] =
                    p[static_cast<std::size_t>(f[static_cast<std::size_t>(i)])];
                if (conj < best) best = conj;
            }
            if (reps.insert(best).second) out.push_back(best);
        }
        int k = n - 1;
        while (k >= 0 && f[static_cast<std::size_t>(k)] == n - 1) f[static_cast<std::size_t>(k--)] = 0;
        if (k < 0) break;
        ++f[static_cast<std::size_t>(k)];
    }
    if (up_to_conjugacy) std::sort(out.begin(), out.end());
    return out;
}

inline Support frame_support(const std::vector<int>& frame, int d, int n)
{
    std::vector<Monomial> ms;
    for (int i = 0; i < n; ++i) ms.push_back(arrow_monomial(i, frame[static_cast<std::size_t>(i)], d));
    return Support::of(d, n, std::move(ms));
}

} // namespace hsym
