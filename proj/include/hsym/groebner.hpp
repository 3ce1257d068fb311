#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "hsym/gfp.hpp"
#include "hsym/monomial.hpp"

namespace hsym {
namespace gb {

// Monomials for the Groebner layer: exponent array plus cached degree,
// compared in graded reverse lexicographic order with x1 > x2 > ... .
struct Mono {
    std::array<std::uint8_t, kMaxVars> e{};
    int deg = 0;

    static Mono of(const Monomial& m, int n)
    {
        Mono out;
        for (int i = 0; i < n; ++i) out.e[static_cast<std::size_t>(i)] = m.e[static_cast<std::size_t>(i)];
        out.deg = m.deg(n);
        return out;
    }

    bool operator==(const Mono& o) const { return deg == o.deg && e == o.e; }
};

// grevlex: higher degree wins; ties broken by the LAST variable in which the
// exponents differ, smaller exponent there winning.
inline bool grevlex_less(const Mono& a, const Mono& b, int n)
{
    if (a.deg != b.deg) return a.deg < b.deg;
    for (int i = n - 1; i >= 0; --i) {
        if (a.e[static_cast<std::size_t>(i)] != b.e[static_cast<std::size_t>(i)])
            return a.e[static_cast<std::size_t>(i)] > b.e[static_cast<std::size_t>(i)];
    }
    return false;
}

inline bool divides(const Mono& a, const Mono& b, int n)
{
    for (int i = 0; i < n; ++i)
        if (a.e[static_cast<std::size_t>(i)] > b.e[static_cast<std::size_t>(i)]) return false;
    return true;
}

inline Mono mono_mul(const Mono& a, const Mono& b, int n)
{
    Mono r;
    for (int i = 0; i < n; ++i)
        r.e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(a.e[static_cast<std::size_t>(i)] + b.e[static_cast<std::size_t>(i)]);
    r.deg = a.deg + b.deg;
    return r;
}

inline Mono mono_div(const Mono& a, const Mono& b, int n)
{
    Mono r;
    for (int i = 0; i < n; ++i)
        r.e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(a.e[static_cast<std::size_t>(i)] - b.e[static_cast<std::size_t>(i)]);
    r.deg = a.deg - b.deg;
    return r;
}

inline Mono mono_lcm(const Mono& a, const Mono& b, int n)
{
    Mono r;
    r.deg = 0;
    for (int i = 0; i < n; ++i) {
        r.e[static_cast<std::size_t>(i)] = std::max(a.e[static_cast<std::size_t>(i)], b.e[static_cast<std::size_t>(i)]);
        r.deg += r.e[static_cast<std::size_t>(i)];
    }
    return r;
}

// Polynomial over F_p, terms sorted descending (leading term first).
struct Poly {
    std::vector<std::pair<Mono, std::uint32_t>> terms;

    bool zero() const { return terms.empty(); }
    const Mono& lm() const { return terms.front().first; }
    std::uint32_t lc() const { return terms.front().second; }
};

inline Poly poly_normalize(std::vector<std::pair<Mono, std::uint32_t>> ts, const PrimeField& f, int n)
{
    std::sort(ts.begin(), ts.end(), [&](const auto& a, const auto& b) { return grevlex_less(b.first, a.first, n); });
    Poly out;
    for (auto& t : ts) {
        std::uint32_t c = t.second % f.p;
        if (c == 0) continue;
        if (!out.terms.empty() && out.terms.back().first == t.first)
            out.terms.back().second = f.add(out.terms.back().second, c);
        else
            out.terms.emplace_back(t.first, c);
        if (out.terms.back().second == 0) out.terms.pop_back();
    }
    return out;
}

// r = a - c * m * b  (the reduction kernel step).
inline Poly submul(const Poly& a, std::uint32_t c, const Mono& m, const Poly& b, const PrimeField& f, int n)
{
    Poly r;
    r.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
        if (j == b.terms.size()) {
            r.terms.push_back(a.terms[i++]);
            continue;
        }
        Mono bm = mono_mul(b.terms[j].first, m, n);
        std::uint32_t bc = f.neg(f.mul(c, b.terms[j].second));
        if (i == a.terms.size()) {
            if (bc != 0) r.terms.emplace_back(bm, bc);
            ++j;
            continue;
        }
        if (a.terms[i].first == bm) {
            std::uint32_t s = f.add(a.terms[i].second, bc);
            if (s != 0) r.terms.emplace_back(bm, s);
            ++i;
            ++j;
        } else if (grevlex_less(bm, a.terms[i].first, n)) {
            r.terms.push_back(a.terms[i++]);
        } else {
            if (bc != 0) r.terms.emplace_back(bm, bc);
            ++j;
        }
    }
    return r;
}

inline Poly make_monic(Poly p, const PrimeField& f)
{
    if (p.zero() || p.lc() == 1) return p;
    std::uint32_t s = f.inv(p.lc());
    for (auto& t : p.terms) t.second = f.mul(t.second, s);
    return p;
}

// Normal-form reduction by the basis, scanning reducers in basis order.
inline Poly reduce_full(Poly h, const std::vector<Poly>& basis, const PrimeField& f, int n)
{
    Poly rem;
    while (!h.zero()) {
        bool hit = false;
        for (const auto& g : basis) {
            if (g.zero()) continue;
            if (divides(g.lm(), h.lm(), n)) {
                Mono q = mono_div(h.lm(), g.lm(), n);
                std::uint32_t c = f.mul(h.lc(), f.inv(g.lc()));
                h = submul(h, c, q, g, f, n);
                hit = true;
                break;
            }
        }
        if (!hit) {
            rem.terms.push_back(h.terms.front());
            h.terms.erase(h.terms.begin());
        }
    }
    return rem;
}

// Buchberger with the normal selection strategy (smallest pair lcm in
// grevlex, then indices) and the coprime-leading-term criterion, followed by
// minimalization and full inter-reduction. Deterministic throughout.
inline std::vector<Poly> buchberger(std::vector<Poly> gens, const PrimeField& f, int n)
{
    std::vector<Poly> g;
    for (auto& p : gens)
        if (!p.zero()) g.push_back(make_monic(p, f));

    struct Pair {
        Mono lcm;
        std::size_t i, j;
    };
    auto pair_less = [&](const Pair& a, const Pair& b) {
        if (!(a.lcm == b.lcm)) return grevlex_less(a.lcm, b.lcm, n);
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };

    std::vector<Pair> pairs;
    auto push_pairs = [&](std::size_t k) {
        for (std::size_t i = 0; i < k; ++i) pairs.push_back({mono_lcm(g[i].lm(), g[k].lm(), n), i, k});
    };
    for (std::size_t k = 1; k < g.size(); ++k) push_pairs(k);

    while (!pairs.empty()) {
        auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
        Pair pr = *it;
        pairs.erase(it);

        const Poly& a = g[pr.i];
        const Poly& b = g[pr.j];
        // Buchberger's first criterion: coprime leading terms reduce to zero.
        if (pr.lcm.deg == a.lm().deg + b.lm().deg) continue;
        // S-polynomial (both generators monic): (lcm/lm(a))*a - (lcm/lm(b))*b.
        Poly left;
        Mono qa = mono_div(pr.lcm, a.lm(), n);
        for (const auto& t : a.terms) left.terms.emplace_back(mono_mul(t.first, qa, n), t.second);
        Poly spoly = submul(left, 1, mono_div(pr.lcm, b.lm(), n), b, f, n);
        spoly = reduce_full(std::move(spoly), g, f, n);
        if (spoly.zero()) continue;
        g.push_back(make_monic(std::move(spoly), f));
        push_pairs(g.size() - 1);
    }

    // Minimalize: drop generators whose leading term another one divides.
    std::vector<Poly> min;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j) continue;
            if (divides(g[j].lm(), g[i].lm(), n) &&
                (!(g[j].lm() == g[i].lm()) || j < i))
                redundant = true;
        }
        if (!redundant) min.push_back(g[i]);
    }
    std::sort(min.begin(), min.end(), [&](const Poly& x, const Poly& y) { return grevlex_less(x.lm(), y.lm(), n); });

    // Full inter-reduction of tails.
    std::vector<Poly> out;
    for (std::size_t i = 0; i < min.size(); ++i) {
        std::vector<Poly> others;
        for (std::size_t j = 0; j < min.size(); ++j)
            if (j != i) others.push_back(min[j]);
        out.push_back(make_monic(reduce_full(min[i], others, f, n), f));
    }
    std::sort(out.begin(), out.end(), [&](const Poly& x, const Poly& y) { return grevlex_less(x.lm(), y.lm(), n); });
    return out;
}

// Per-variable minimal pure-power degree among the leading terms, if any.
inline std::vector<std::optional<int>> pure_power_summary(const std::vector<Poly>& basis, int n)
{
    std::vector<std::optional<int>> out(static_cast<std::size_t>(n));
    for (const auto& g : basis) {
        if (g.zero()) continue;
        const Mono& lm = g.lm();
        int var = -1;
        bool pure = true;
        for (int i = 0; i < n && pure; ++i) {
            if (lm.e[static_cast<std::size_t>(i)] == 0) continue;
            if (var >= 0) pure = false;
            var = i;
        }
        if (!pure || var < 0) continue;
        int k = lm.e[static_cast<std::size_t>(var)];
        auto& slot = out[static_cast<std::size_t>(var)];
        if (!slot || *slot > k) slot = k;
    }
    return out;
}

} // namespace gb
} // namespace hsym
