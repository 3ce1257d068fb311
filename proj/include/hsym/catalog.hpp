#pragma once

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hsym/action_data.hpp"

namespace hsym {

// One classified case: generator string in diag[...] sugar, cyclic orders as
// printed there, and the listed invariant support.
struct CatalogCase {
    std::string label;
    std::string generators;
    std::vector<std::int64_t> claimed_orders; // cyclic factors as listed
    std::vector<std::string> claimed_support;
};

inline const std::vector<CatalogCase>& catalog_cases()
{
    static const std::vector<CatalogCase> cases = {
        {"main-1", "diag[w:w^5:w^3:1:w^4:w^2]; w^6=1", {2, 3},
         {"x1^2*x2", "x2^2*x3", "x3^2*x1", "x4^2*x1", "x5^2*x2", "x6^2*x3", "x3*x4*x5", "x1*x5*x6", "x2*x4*x6"}},
        {"main-2", "diag[w:w^6:w^4:1:w^5:w^2]; w^8=1", {8},
         {"x1^2*x2", "x2^2*x3", "x3^2*x4", "x4^3", "x5^2*x2", "x1*x5*x6", "x6^2*x3", "x2*x6*x4"}},
        {"main-3", "diag[w:w^2:1:z:w^2*z:1]; w^4=z^2=1", {2, 4},
         {"x1^2*x2", "x2^2*x3", "x2^2*x6", "x2*x4*x5", "x3^3", "x3^2*x6", "x4^2*x3", "x5^2*x3", "x6^2*x3",
          "x4^2*x6", "x5^2*x6", "x6^3"}},
        {"main-4", "diag[w:w^2:1:w*z:w^2*z:1]; w^4=z^2=1", {2, 4},
         {"x1^2*x2", "x2^2*x3", "x3^3", "x4^2*x2", "x1*x4*x5", "x5^2*x3", "x5^2*x6", "x6^2*x3", "x2^2*x6",
          "x3^2*x6", "x6^3"}},
        {"main-5", "diag[w:w^2:1:w*z:w^2*z:z]; w^4=z^2=1", {2, 4},
         {"x1^2*x2", "x2^2*x3", "x3^3", "x4^2*x2", "x1*x4*x5", "x5^2*x3", "x2*x5*x6", "x6^2*x3"}},
        {"main-6", "diag[w:w^2:1:w^2*z:z:w^3*z]; w^4=z^2=1", {2, 4},
         {"x1^2*x2", "x2^2*x3", "x3^3", "x4^2*x3", "x5^2*x3", "x2*x4*x5", "x1*x5*x6", "x6^2*x2"}},
        {"main-7", "diag[a:b:a*b:1:w:z]; a^2=b^2=w^3=z^3=1", {2, 2, 3, 3},
         {"x1^2*x4", "x2^2*x4", "x3^2*x4", "x1*x2*x3", "x4^3", "x5^3", "x6^3"}},
        {"main-8", "diag[a:b:a*b:w:1:w^4]; a^2=b^2=w^6=1", {2, 2, 2, 3},
         {"x1^2*x5", "x2^2*x5", "x3^2*x5", "x1*x2*x3", "x5^3", "x4^2*x6", "x6^3"}},
        {"main2-1", "diag[1:w:w^4:w^3]; w^6=1", {6},
         {"x1^3*x2", "x1^2*x3*x4", "x1*x2*x4^2", "x2^3*x3", "x3^3*x2", "x4^3*x3"}},
        {"main2-2", "diag[1:w:w^4:w^5]; w^6=1", {6},
         {"x1^3*x2", "x1*x2^2*x4", "x1*x3^2*x4", "x2^3*x3", "x3^3*x2", "x4^3*x3"}},
        {"main2-3", "diag[w:w^6:1:w^4]; w^9=1", {9},
         {"x1^3*x2", "x2^3*x3", "x3^4", "x4^3*x2", "x1*x3*x4^2"}},
        // x4^3*x2 is sometimes quoted for this case, but under the stated
        // group it has weight 6 mod 9 while the rest of the support sits at
        // weight 0. The invariant set of the group contains x4^3*x3.
        {"main2-4", "diag[w:w^6:1:w^3]; w^9=1", {9},
         {"x1^3*x2", "x2^3*x3", "x3^4", "x4^3*x3", "x2^2*x4^2", "x2*x3^2*x4"}},
        {"main2-5", "diag[w^4:1:w^8:w^3]; w^12=1", {12},
         {"x1^3*x2", "x1^2*x3^2", "x1*x2^2*x3", "x2^4", "x3^3*x2", "x4^4"}},
    };
    return cases;
}

inline const CatalogCase& catalog_case(const std::string& label)
{
    for (const auto& c : catalog_cases())
        if (c.label == label) return c;
    throw std::invalid_argument("unknown catalog label: " + label);
}

inline int catalog_degree(const CatalogCase& c) { return c.label.rfind("main2", 0) == 0 ? 4 : 3; }

// "diag[w:w^6:w^4:1:w^5:w^2]; w^8=1" -> cyclic orders per symbol plus one
// exponent tuple per coordinate. Symbols are single letters; coordinates are
// '*'-separated powers; relations "sym^k=...=1" fix the orders.
struct ParsedGenerators {
    std::vector<char> symbols;
    std::vector<std::int64_t> orders;
    std::vector<std::vector<std::int64_t>> coords; // per coordinate, exponent of each symbol
};

inline ParsedGenerators parse_generator_string(const std::string& text)
{
    auto fail = [&]() { throw std::invalid_argument("bad generator string: " + text); };
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;

    auto lb = s.find("diag[");
    auto rb = s.find(']');
    if (lb == std::string::npos || rb == std::string::npos || rb < lb) fail();
    std::string body = s.substr(lb + 5, rb - lb - 5);
    std::string rels = s.substr(rb + 1);
    if (!rels.empty() && rels[0] == ';') rels = rels.substr(1);

    ParsedGenerators out;
    auto sym_index = [&](char c) -> int {
        for (std::size_t i = 0; i < out.symbols.size(); ++i)
            if (out.symbols[i] == c) return static_cast<int>(i);
        return -1;
    };

    // Relations first: they declare the symbols and orders.
    {
        std::vector<std::string> parts;
        std::string cur;
        for (char c : rels) {
            if (c == '=') {
                parts.push_back(cur);
                cur.clear();
            } else
                cur += c;
        }
        parts.push_back(cur);
        if (parts.size() < 2 || parts.back() != "1") fail();
        parts.pop_back();
        for (const auto& p : parts) {
            if (p.empty() || !std::isalpha(static_cast<unsigned char>(p[0]))) fail();
            char sym = p[0];
            std::int64_t ord = 1;
            if (p.size() > 1) {
                if (p[1] != '^') fail();
                ord = std::stoll(p.substr(2));
            }
            if (ord < 1 || sym_index(sym) >= 0) fail();
            out.symbols.push_back(sym);
            out.orders.push_back(ord);
        }
    }

    // Coordinates.
    {
        std::vector<std::string> coords;
        std::string cur;
        for (char c : body) {
            if (c == ':') {
                coords.push_back(cur);
                cur.clear();
            } else
                cur += c;
        }
        coords.push_back(cur);
        for (const auto& co : coords) {
            std::vector<std::int64_t> exps(out.symbols.size(), 0);
            std::string part;
            std::vector<std::string> factors;
            for (char c : co) {
                if (c == '*') {
                    factors.push_back(part);
                    part.clear();
                } else
                    part += c;
            }
            factors.push_back(part);
            for (const auto& fct : factors) {
                if (fct == "1") continue;
                if (fct.empty() || !std::isalpha(static_cast<unsigned char>(fct[0]))) fail();
                int idx = sym_index(fct[0]);
                if (idx < 0) fail();
                std::int64_t e = 1;
                if (fct.size() > 1) {
                    if (fct[1] != '^') fail();
                    e = std::stoll(fct.substr(2));
                }
                exps[static_cast<std::size_t>(idx)] += e;
            }
            out.coords.push_back(std::move(exps));
        }
    }
    return out;
}

// Normalize a cyclic-orders presentation plus per-coordinate exponents into
// ActionData with invariant factors. The target character is inferred from
// the support the data is supposed to fix (all its monomials must agree).
inline ActionData action_from_generators(int d, const ParsedGenerators& g, const Support& target_support)
{
    const int n = static_cast<int>(g.coords.size());
    PresentationChange pc = normalize_presentation(g.orders);
    const int r = static_cast<int>(g.orders.size());

    // Weight of coordinate i at the new generator k: sum_j coord_exp_j *
    // (U^{-1})_{j,k} / m_j, folded into a residue against d_k.
    std::vector<Character> weights;
    for (int i = 0; i < n; ++i) {
        Character ch;
        for (int k = 0; k < r; ++k) {
            if (pc.all_factors[static_cast<std::size_t>(k)] <= 1) continue;
            std::int64_t dk = pc.all_factors[static_cast<std::size_t>(k)];
            // value = sum_j c_j * Uinv[j][k] / m_j  (mod 1), with denominator | dk
            std::int64_t den = 1;
            for (auto m : g.orders) den = lcm64(den, m);
            std::int64_t acc = 0;
            for (int j = 0; j < r; ++j)
                acc = add64(acc, mul64(mul64(g.coords[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                                             pc.u_inv[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]),
                                       den / g.orders[static_cast<std::size_t>(j)]));
            acc = posmod64(acc, den);
            std::int64_t gc = gcd64(acc, den);
            std::int64_t p = acc / (gc == 0 ? 1 : gc), q = den / (gc == 0 ? 1 : gc);
            if (acc == 0) { p = 0; q = 1; }
            if (dk % q != 0) throw std::logic_error("weight has wrong order under new presentation");
            ch.c.push_back(posmod64(mul64(p, dk / q), dk));
        }
        weights.push_back(std::move(ch));
    }

    ActionData probe = make_action_data(d, n, pc.pres, weights, Character{std::vector<std::int64_t>(pc.pres.factors.size(), 0)});

    // Infer the target from the support: every listed monomial must carry
    // one and the same weight.
    Character target;
    for (std::size_t k = 0; k < pc.pres.factors.size(); ++k) {
        std::int64_t acc = 0;
        for (int i = 0; i < n; ++i)
            acc += mul64(target_support.mons[0].e[static_cast<std::size_t>(i)], probe.weights[static_cast<std::size_t>(i)].c[k]);
        target.c.push_back(posmod64(acc, pc.pres.factors[k]));
    }
    for (const auto& m : target_support.mons)
        for (std::size_t k = 0; k < pc.pres.factors.size(); ++k) {
            std::int64_t acc = 0;
            for (int i = 0; i < n; ++i) acc += mul64(m.e[static_cast<std::size_t>(i)], probe.weights[static_cast<std::size_t>(i)].c[k]);
            if (posmod64(acc, pc.pres.factors[k]) != target.c[k])
                throw std::invalid_argument("support monomials disagree on the weight");
        }
    return make_action_data(d, n, pc.pres, probe.weights, target);
}

inline ActionData catalog_action(const CatalogCase& c)
{
    ParsedGenerators g = parse_generator_string(c.generators);
    int d = catalog_degree(c);
    int n = static_cast<int>(g.coords.size());
    Support claimed = parse_support(d, n, c.claimed_support);
    return action_from_generators(d, g, claimed);
}

inline AbelianPresentation normalize_claimed_structure(const std::vector<std::int64_t>& orders)
{
    return normalize_presentation(orders).pres;
}

} // namespace hsym
