#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hsym/abelian.hpp"
#include "hsym/hnf.hpp"
#include "hsym/monomial.hpp"

namespace hsym {

// Character of the presented group, as residue components against the
// invariant factors: g |-> exp(2*pi*i * sum_k c_k g_k / n_k).
struct Character {
    std::vector<std::int64_t> c;

    bool operator==(const Character& o) const { return c == o.c; }
    bool operator!=(const Character& o) const { return c != o.c; }
};

struct IncomparableDataError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The data I = (G, lambda, lambda_1, ..., lambda_n): a presented finite
// abelian group acting diagonally on n coordinates in degree d, together
// with the semi-invariance character of the defining polynomial.
struct ActionData {
    int d = 0;
    int n = 0;
    AbelianPresentation pres;
    std::vector<Character> weights; // lambda_1 .. lambda_n
    Character target;               // lambda

    std::int64_t group_order() const { return pres.order(); }
};

namespace detail {

inline void reduce_character(Character& ch, const AbelianPresentation& pres)
{
    if (ch.c.size() != pres.factors.size()) throw std::invalid_argument("character rank mismatch");
    for (std::size_t k = 0; k < ch.c.size(); ++k) ch.c[k] = posmod64(ch.c[k], pres.factors[k]);
}

// Mixed-radix enumeration of all elements/characters of the presented group.
template <typename F>
inline void for_each_tuple(const AbelianPresentation& pres, F&& fn, std::int64_t guard = 1000000)
{
    if (pres.order() > guard) throw std::runtime_error("group too large to enumerate");
    std::vector<std::int64_t> g(pres.factors.size(), 0);
    for (;;) {
        fn(g);
        std::size_t k = 0;
        while (k < g.size()) {
            if (++g[k] < pres.factors[k]) break;
            g[k] = 0;
            ++k;
        }
        if (k == g.size()) break;
    }
}

// Value of a character at a group element, as a reduced fraction mod 1.
inline std::pair<std::int64_t, std::int64_t> eval_character(const Character& ch,
                                                            const std::vector<std::int64_t>& g,
                                                            const AbelianPresentation& pres)
{
    std::int64_t den = 1;
    for (auto f : pres.factors) den = lcm64(den, f);
    std::int64_t acc = 0;
    for (std::size_t k = 0; k < ch.c.size(); ++k)
        acc = posmod64(add64(acc, mul64(mul64(ch.c[k], g[k]), den / pres.factors[k])), den);
    std::int64_t gc = gcd64(acc, den);
    if (gc == 0) return {0, 1};
    return {acc / gc, den / gc};
}

} // namespace detail

// Validating constructor. Faithfulness is projective: the only group element
// with all weights equal is the identity. Non-faithful inputs are rejected.
inline ActionData make_action_data(int d, int n, AbelianPresentation pres,
                                   std::vector<Character> weights, Character target,
                                   bool check_faithful = true)
{
    if (d < 1 || n < 1 || n > kMaxVars) throw std::invalid_argument("bad (d, n)");
    if (static_cast<int>(weights.size()) != n) throw std::invalid_argument("need n weights");
    ActionData I;
    I.d = d;
    I.n = n;
    I.pres = std::move(pres);
    for (auto& w : weights) detail::reduce_character(w, I.pres);
    detail::reduce_character(target, I.pres);
    I.weights = std::move(weights);
    I.target = std::move(target);

    if (check_faithful && I.pres.rank() > 0) {
        bool ok = true;
        detail::for_each_tuple(I.pres, [&](const std::vector<std::int64_t>& g) {
            if (!ok) return;
            bool zero = true;
            for (auto x : g)
                if (x != 0) zero = false;
            if (zero) return;
            auto first = detail::eval_character(I.weights[0], g, I.pres);
            for (int i = 1; i < n; ++i)
                if (detail::eval_character(I.weights[static_cast<std::size_t>(i)], g, I.pres) != first) return;
            ok = false; // nonzero element acting as a scalar
        });
        if (!ok) throw std::invalid_argument("action is not projectively faithful");
    }
    return I;
}

// S_I: all degree-d monomials whose weight equals the target character.
inline Support invariant_monomials(const ActionData& I)
{
    std::vector<Monomial> hits;
    for (const auto& m : enumerate_monomials(I.d, I.n)) {
        bool ok = true;
        for (std::size_t k = 0; k < I.pres.factors.size() && ok; ++k) {
            std::int64_t acc = 0;
            for (int i = 0; i < I.n; ++i)
                acc += mul64(m.e[static_cast<std::size_t>(i)], I.weights[static_cast<std::size_t>(i)].c[k]);
            ok = posmod64(acc - I.target.c[k], I.pres.factors[k]) == 0;
        }
        if (ok) hits.push_back(m);
    }
    return Support::of(I.d, I.n, std::move(hits));
}

// Weight equality classes: ids such that ids[i] == ids[j] iff lambda_i == lambda_j.
inline std::vector<int> lambda_classes(const ActionData& I)
{
    std::vector<int> ids(static_cast<std::size_t>(I.n), -1);
    int next = 0;
    for (int i = 0; i < I.n; ++i) {
        if (ids[static_cast<std::size_t>(i)] >= 0) continue;
        ids[static_cast<std::size_t>(i)] = next;
        for (int j = i + 1; j < I.n; ++j)
            if (ids[static_cast<std::size_t>(j)] < 0 &&
                I.weights[static_cast<std::size_t>(i)] == I.weights[static_cast<std::size_t>(j)])
                ids[static_cast<std::size_t>(j)] = next;
        ++next;
    }
    return ids;
}

// Equivalence of data over the same presentation: some character xi twists
// every weight and the target by xi^d.
inline bool are_equivalent(const ActionData& a, const ActionData& b)
{
    if (a.d != b.d || a.n != b.n) throw IncomparableDataError("incomparable data");
    if (!(a.pres == b.pres)) throw IncomparableDataError("incomparable data");
    bool found = false;
    detail::for_each_tuple(a.pres, [&](const std::vector<std::int64_t>& xi) {
        if (found) return;
        for (std::size_t k = 0; k < a.pres.factors.size(); ++k) {
            std::int64_t nk = a.pres.factors[k];
            for (int i = 0; i < a.n; ++i)
                if (posmod64(a.weights[static_cast<std::size_t>(i)].c[k] + xi[k] -
                                 b.weights[static_cast<std::size_t>(i)].c[k],
                             nk) != 0)
                    return;
            if (posmod64(a.target.c[k] + mul64(a.d, xi[k]) - b.target.c[k], nk) != 0) return;
        }
        found = true;
    });
    return found;
}

// Induced data J = (H, restrictions) for the subgroup H generated by the
// given element tuples (coordinates against I's presentation).
inline ActionData induce(const ActionData& I, const std::vector<std::vector<std::int64_t>>& subgroup_gens)
{
    const int r = I.pres.rank();
    const int t = static_cast<int>(subgroup_gens.size());
    for (const auto& g : subgroup_gens)
        if (static_cast<int>(g.size()) != r) throw std::invalid_argument("generator not in G");

    if (t == 0 || r == 0) {
        // Trivial subgroup: every weight restricts to the trivial character.
        std::vector<Character> w(static_cast<std::size_t>(I.n), Character{});
        return make_action_data(I.d, I.n, AbelianPresentation{}, std::move(w), Character{}, false);
    }

    // Relation lattice K = {x in Z^t : sum_s x_s gen_s = 0 in G}: the
    // projection to x of the left kernel of [gens; diag(n)].
    IntMat stacked(t + r, r);
    for (int s = 0; s < t; ++s)
        for (int k = 0; k < r; ++k) stacked.at(s, k) = subgroup_gens[static_cast<std::size_t>(s)][static_cast<std::size_t>(k)];
    for (int k = 0; k < r; ++k) stacked.at(t + k, k) = I.pres.factors[static_cast<std::size_t>(k)];
    IntMat stacked_t(r, t + r);
    for (int i = 0; i < t + r; ++i)
        for (int j = 0; j < r; ++j) stacked_t.at(j, i) = stacked.at(i, j);
    std::vector<std::vector<Int>> kernel = integer_kernel(stacked_t);

    IntMat relations(static_cast<int>(kernel.size()), t);
    for (std::size_t i = 0; i < kernel.size(); ++i)
        for (int j = 0; j < t; ++j) relations.at(static_cast<int>(i), j) = kernel[i][static_cast<std::size_t>(j)];

    SnfResult s = smith_normal_form(relations);
    if (s.rank != t) throw std::logic_error("subgroup relation lattice is not full rank");

    // Z^t / K = sum Z/d_i with new generator i = (row i of V^{ -1 }) . gens.
    std::vector<std::int64_t> new_factors;
    std::vector<std::vector<std::int64_t>> new_gens; // coordinates in G
    for (int i = 0; i < t; ++i) {
        std::int64_t di = to_i64(s.d.at(i, i));
        if (di <= 1) continue;
        std::vector<std::int64_t> h(static_cast<std::size_t>(r), 0);
        for (int ss = 0; ss < t; ++ss) {
            std::int64_t coef = to_i64(s.v_inv.at(i, ss));
            for (int k = 0; k < r; ++k)
                h[static_cast<std::size_t>(k)] =
                    posmod64(add64(h[static_cast<std::size_t>(k)],
                                   mul64(coef, subgroup_gens[static_cast<std::size_t>(ss)][static_cast<std::size_t>(k)])),
                             I.pres.factors[static_cast<std::size_t>(k)]);
        }
        new_factors.push_back(di);
        new_gens.push_back(std::move(h));
    }

    AbelianPresentation hp{new_factors};
    auto restrict_char = [&](const Character& ch) {
        Character out;
        for (std::size_t i = 0; i < new_gens.size(); ++i) {
            auto [p, q] = detail::eval_character(ch, new_gens[i], I.pres);
            std::int64_t di = new_factors[i];
            if (di % q != 0) throw std::logic_error("restricted character has wrong order");
            out.c.push_back(posmod64(mul64(p, di / q), di));
        }
        return out;
    };

    std::vector<Character> w;
    w.reserve(static_cast<std::size_t>(I.n));
    for (const auto& lam : I.weights) w.push_back(restrict_char(lam));
    return make_action_data(I.d, I.n, hp, std::move(w), restrict_char(I.target), false);
}

// Invariant-factor type of the image of G in the projective torus; with
// faithfulness enforced at construction this is the presentation itself.
inline AbelianPresentation group_structure(const ActionData& I) { return I.pres; }

// The full diagonal group giving every monomial of S one common weight,
// modulo scalars: torsion_dual of the difference family, plus that weight.
struct StabilizerResult {
    int free_rank = 0;
    FiniteDiagonalGroup group;
    Character weight_class; // common weight against group.structure
    ActionData data;        // assembled action data of the stabilizer
};

inline ActionData action_from_group(const FiniteDiagonalGroup& g, int d, Character target)
{
    std::vector<Character> w(static_cast<std::size_t>(g.n));
    for (int i = 0; i < g.n; ++i) {
        Character ch;
        for (const auto& gen : g.gens) ch.c.push_back(gen.num[static_cast<std::size_t>(i)]);
        w[static_cast<std::size_t>(i)] = std::move(ch);
    }
    return make_action_data(d, g.n, g.structure, std::move(w), std::move(target), false);
}

inline StabilizerResult equal_weight_stabilizer(const Support& s)
{
    if (s.empty()) throw std::invalid_argument("equal_weight_stabilizer: empty support");
    const Monomial& base = s.mons[0];
    std::vector<std::vector<std::int64_t>> rows;
    for (int i = 1; i < s.size(); ++i) rows.push_back(diff_vector(s.mons[static_cast<std::size_t>(i)], base, s.n));
    TorsionDualResult td = torsion_dual(rows, s.n);

    StabilizerResult out;
    out.free_rank = td.free_rank;
    out.group = td.group;
    std::vector<int> alpha(static_cast<std::size_t>(s.n));
    for (int i = 0; i < s.n; ++i) alpha[static_cast<std::size_t>(i)] = base.e[static_cast<std::size_t>(i)];
    for (std::size_t k = 0; k < out.group.gens.size(); ++k) {
        auto [p, q] = out.group.gens[k].dot(alpha);
        std::int64_t mk = out.group.structure.factors[k];
        if (mk % q != 0) throw std::logic_error("weight class has wrong order");
        out.weight_class.c.push_back(posmod64(mul64(p, mk / q), mk));
    }
    out.data = action_from_group(out.group, s.d, out.weight_class);
    return out;
}

// Zero-sum integer vectors w with sum_i w_i lambda_i trivial: the annihilator
// of the projective image of G, i.e. the twist-invariant weight-relation
// lattice. For closed pairs it coincides with the monomial difference lattice.
inline Lattice weight_relation_lattice(const ActionData& I)
{
    const int r = I.pres.rank();
    IntMat a(1 + r, I.n + r);
    for (int i = 0; i < I.n; ++i) a.at(0, i) = 1;
    for (int k = 0; k < r; ++k) {
        for (int i = 0; i < I.n; ++i) a.at(1 + k, i) = I.weights[static_cast<std::size_t>(i)].c[static_cast<std::size_t>(k)];
        a.at(1 + k, I.n + k) = I.pres.factors[static_cast<std::size_t>(k)];
    }
    Lattice l(I.n);
    for (const auto& z : integer_kernel(a)) {
        std::vector<std::int64_t> w(static_cast<std::size_t>(I.n));
        for (int i = 0; i < I.n; ++i) w[static_cast<std::size_t>(i)] = to_i64(z[static_cast<std::size_t>(i)]);
        l.add(std::move(w));
    }
    return l;
}

// Canonical key of the class of I under coordinate permutation and
// equivalence twist. The serialized invariants (sorted S_I, HNF of the
// weight-relation lattice, canonical representative of the target coset)
// are twist-invariant; the key is their minimum over all n! permutations.
inline std::string canonical_form(const ActionData& I)
{
    Support s = invariant_monomials(I);
    Lattice lam = weight_relation_lattice(I);

    // One integer representative of the target-weight coset (S_I, when
    // nonempty, lies inside it; solve the congruences otherwise so the key
    // still separates lambda-classes with empty S_I).
    std::optional<std::vector<std::int64_t>> coset;
    if (!s.empty()) {
        std::vector<std::int64_t> a0(static_cast<std::size_t>(I.n));
        for (int i = 0; i < I.n; ++i) a0[static_cast<std::size_t>(i)] = s.mons[0].e[static_cast<std::size_t>(i)];
        coset = a0;
    } else {
        const int r = I.pres.rank();
        IntMat a(1 + r, I.n + r);
        std::vector<Int> b(static_cast<std::size_t>(1 + r));
        for (int i = 0; i < I.n; ++i) a.at(0, i) = 1;
        b[0] = I.d;
        for (int k = 0; k < r; ++k) {
            for (int i = 0; i < I.n; ++i)
                a.at(1 + k, i) = I.weights[static_cast<std::size_t>(i)].c[static_cast<std::size_t>(k)];
            a.at(1 + k, I.n + k) = I.pres.factors[static_cast<std::size_t>(k)];
            b[static_cast<std::size_t>(1 + k)] = I.target.c[static_cast<std::size_t>(k)];
        }
        if (auto z = solve_linear(a, b)) {
            std::vector<std::int64_t> c0(static_cast<std::size_t>(I.n));
            for (int i = 0; i < I.n; ++i) c0[static_cast<std::size_t>(i)] = to_i64((*z)[static_cast<std::size_t>(i)]);
            coset = c0;
        }
    }

    std::vector<int> perm(static_cast<std::size_t>(I.n));
    for (int i = 0; i < I.n; ++i) perm[static_cast<std::size_t>(i)] = i;

    std::string best;
    do {
        // new index perm[i] receives old index i
        std::vector<std::vector<std::int64_t>> rows;
        for (const auto& row : lam.rows()) {
            std::vector<std::int64_t> p(static_cast<std::size_t>(I.n));
            for (int i = 0; i < I.n; ++i) p[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = row[static_cast<std::size_t>(i)];
            rows.push_back(std::move(p));
        }
        Lattice pl = lattice_from_rows(I.n, rows);

        std::vector<Monomial> pm;
        pm.reserve(s.mons.size());
        for (const auto& m : s.mons) {
            Monomial q;
            for (int i = 0; i < I.n; ++i) q.e[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = m.e[static_cast<std::size_t>(i)];
            pm.push_back(q);
        }
        std::sort(pm.begin(), pm.end(), MonomialOrder{});

        std::string key = "d" + std::to_string(I.d) + "n" + std::to_string(I.n) + "|L" + pl.key() + "|S";
        for (const auto& m : pm)
            for (int i = 0; i < I.n; ++i) key += static_cast<char>('0' + m.e[static_cast<std::size_t>(i)]);
        key += "|c";
        if (coset) {
            std::vector<std::int64_t> pc(static_cast<std::size_t>(I.n));
            for (int i = 0; i < I.n; ++i) pc[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = (*coset)[static_cast<std::size_t>(i)];
            for (auto x : pl.reduce(pc)) key += std::to_string(x) + ",";
        } else {
            key += "none";
        }

        if (best.empty() || key < best) best = key;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace hsym
