#pragma once

#include <vector>

#include "hsym/action_data.hpp"
#include "hsym/hnf.hpp"
#include "hsym/monomial.hpp"

namespace hsym {

// A closed pair: a support equal to the full set of degree-d monomials in
// the coset base + diff, where diff is exactly the difference lattice of the
// support. The stabilizer group of the support is Ann(diff)/diagonal, so the
// pair is a fixed point of the stabilizer/invariant-monomial iteration.
struct ClosedPair {
    Support support;
    Lattice diff;
    Monomial base;

    ClosedPair() : diff(0) {}

    std::string key() const { return support.key(); }
};

inline ClosedPair close_from(const Lattice& l, const Monomial& base, const Support& constraints,
                             const std::vector<Monomial>& universe)
{
    ClosedPair out;
    out.diff = l;
    std::vector<Monomial> hits;
    for (const auto& m : universe)
        if (out.diff.contains(diff_vector(m, base, constraints.n))) hits.push_back(m);
    out.support = Support::of(constraints.d, constraints.n, std::move(hits));
    out.base = out.support.mons[0];
    return out;
}

inline ClosedPair close_support(const Support& constraints, const std::vector<Monomial>& universe)
{
    if (constraints.empty()) throw std::invalid_argument("closure of empty constraint set");
    Lattice l(constraints.n);
    const Monomial& base = constraints.mons[0];
    for (int i = 1; i < constraints.size(); ++i)
        l.add(diff_vector(constraints.mons[static_cast<std::size_t>(i)], base, constraints.n));
    return close_from(l, base, constraints, universe);
}

inline ClosedPair extend_pair(const ClosedPair& p, const Monomial& m, const std::vector<Monomial>& universe)
{
    Lattice l = p.diff;
    l.add(diff_vector(m, p.base, p.support.n));
    return close_from(l, p.base, p.support, universe);
}

// Action data of a closed pair: the stabilizer group with the common weight
// of the support.
struct ClosureOutcome {
    int free_rank = 0;
    FiniteDiagonalGroup group;
    Character weight_class;
    Support support;
    ActionData data;
};

inline ClosureOutcome closure_outcome(const ClosedPair& p)
{

    StabilizerResult st = equal_weight_stabilizer(p.support);
    ClosureOutcome out;
    out.free_rank = st.free_rank;
    out.group = st.group;
    out.weight_class = st.weight_class;
    out.support = p.support;
    out.data = st.data;
    return out;
}

// One-shot closure of a constraint support: iterate stabilizer and invariant
// set to the fixed point (one step suffices; the pair below is closed).
inline ClosureOutcome closure(const Support& s0)
{
    return closure_outcome(close_support(s0, enumerate_monomials(s0.d, s0.n)));
}

} // namespace hsym
