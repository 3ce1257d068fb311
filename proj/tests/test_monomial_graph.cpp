#include <doctest.h>

#include "hsym/chains.hpp"
#include "hsym/digraph.hpp"
#include "hsym/monomial.hpp"
#include "hsym/rng.hpp"

using namespace hsym;

TEST_CASE("monomial enumeration counts and order")
{
    CHECK(enumerate_monomials(3, 6).size() == 56);
    CHECK(enumerate_monomials(4, 4).size() == 35);
    auto lin = enumerate_monomials(1, 3);
    REQUIRE(lin.size() == 3);
    CHECK(monomial_to_string(lin[0], 3) == "x1");
    CHECK(monomial_to_string(lin[2], 3) == "x3");

    auto ms = enumerate_monomials(3, 4);
    CHECK(monomial_to_string(ms.front(), 4) == "x1^3");
    CHECK(monomial_to_string(ms.back(), 4) == "x4^3");
    for (std::size_t i = 0; i + 1 < ms.size(); ++i) CHECK(lex_after(ms[i], ms[i + 1]));
    CHECK_THROWS_AS(enumerate_monomials(0, 3), std::invalid_argument);
}

TEST_CASE("monomial strings parse and render both ways")
{
    SplitMix64 rng(31337);
    for (int t = 0; t < 200; ++t) {
        int n = 1 + static_cast<int>(rng.range(0, 5));
        int d = 1 + static_cast<int>(rng.range(0, 4));
        auto all = enumerate_monomials(d, n);
        const Monomial& m = all[rng.next() % all.size()];
        CHECK(parse_monomial(monomial_to_string(m, n), n) == m);
    }
    CHECK(parse_monomial("x1^2*x2", 3) == parse_monomial("x2*x1^2", 3));
    CHECK_THROWS_AS(parse_monomial("y1", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_monomial("x7", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_monomial("x1^", 3), std::invalid_argument);
}

TEST_CASE("M-sets on the documented examples")
{
    SUBCASE("M(1,3;2) empty on the small quartic support")
    {
        auto s = parse_support(4, 4, {"x1^3*x2", "x2^3*x3", "x3^3*x2", "x4^3*x3"});
        CHECK(m_set(s, {0, 2}, {1}).empty());
    }
    SUBCASE("M(1,4;2) empty on the second small quartic support")
    {
        auto s = parse_support(4, 4, {"x1^3*x2", "x2^3*x3", "x3^4", "x4^3*x2"});
        CHECK(m_set(s, {0, 3}, {1}).empty());
    }
    SUBCASE("A = all variables, B empty returns S itself")
    {
        auto s = parse_support(3, 3, {"x1^2*x2", "x2^2*x3", "x3^3"});
        CHECK(m_set(s, {0, 1, 2}, {}) == s);
    }
    SUBCASE("overlapping A and B is an error")
    {
        auto s = parse_support(3, 3, {"x1^3"});
        CHECK_THROWS_AS(m_set(s, {0, 1}, {1}), std::invalid_argument);
    }
}

TEST_CASE("edge graphs")
{
    SUBCASE("the eight-monomial C8 support")
    {
        auto s = parse_support(3, 6,
                               {"x1^2*x2", "x2^2*x3", "x3^2*x4", "x4^3", "x5^2*x2", "x1*x5*x6", "x6^2*x3", "x2*x6*x4"});
        DirectedGraph e = edge_graph(s);
        std::vector<std::pair<int, int>> want = {{0, 1}, {1, 2}, {2, 3}, {3, 3}, {4, 1}, {5, 2}};
        CHECK(e.arrows == want);
    }
    SUBCASE("Fermat support gives exactly the self-loops")
    {
        std::vector<Monomial> f;
        for (int i = 0; i < 5; ++i) {
            Monomial m;
            m.e[static_cast<std::size_t>(i)] = 4;
            f.push_back(m);
        }
        DirectedGraph e = edge_graph(Support::of(4, 5, f));
        REQUIRE(e.arrows.size() == 5);
        for (int i = 0; i < 5; ++i) CHECK(e.has(i, i));
    }
    SUBCASE("no power-shape monomials, no arrows")
    {
        auto s = parse_support(3, 4, {"x1*x2*x3", "x2*x3*x4"});
        CHECK(edge_graph(s).arrows.empty());
    }
}

TEST_CASE("frame enumeration")
{
    CHECK(enumerate_frames(3, 2, false).size() == 4);
    CHECK(enumerate_frames(3, 2, true).size() == 3);
    CHECK(enumerate_frames(3, 4, false).size() == 256);
    CHECK(enumerate_frames(3, 6, false).size() == 46656);

    // canonization is conjugacy-invariant: conjugating a map never changes
    // its representative class
    SplitMix64 rng(2024);
    auto reps = enumerate_frames(3, 4, true);
    std::set<std::vector<int>> repset(reps.begin(), reps.end());
    auto all = enumerate_frames(3, 4, false);
    std::vector<int> perm = {0, 1, 2, 3};
    for (int t = 0; t < 50; ++t) {
        const auto& f = all[rng.next() % all.size()];
        for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.next() % i]);
        std::vector<int> conj(4);
        for (int i = 0; i < 4; ++i) conj[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] =
            perm[static_cast<std::size_t>(f[static_cast<std::size_t>(i)])];
        // both must canonize into the same representative set member
        auto canon = [&](const std::vector<int>& g) {
            std::vector<int> p = {0, 1, 2, 3}, best = g, c(4);
            do {
                for (int i = 0; i < 4; ++i) c[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])] =
                    p[static_cast<std::size_t>(g[static_cast<std::size_t>(i)])];
                if (c < best) best = c;
            } while (std::next_permutation(p.begin(), p.end()));
            return best;
        };
        CHECK(canon(f) == canon(conj));
        CHECK(repset.count(canon(f)) == 1);
    }
}

TEST_CASE("chain invariants")
{
    auto lam_distinct = [](int n) {
        std::vector<int> ids(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) ids[static_cast<std::size_t>(i)] = i;
        return ids;
    };

    SUBCASE("C8 class: (s,c) = (4,0) with witness 1,2,3,4")
    {
        DirectedGraph e;
        e.n = 6;
        e.arrows = {{0, 1}, {1, 2}, {2, 3}, {3, 3}, {4, 1}, {5, 2}};
        auto ci = chain_invariants_core(e, lam_distinct(6));
        CHECK(ci.s == 4);
        CHECK(ci.c == 0);
        CHECK(ci.witness == std::vector<int>{0, 1, 2, 3});
    }
    SUBCASE("C6 class: (s,c) = (4,2)")
    {
        DirectedGraph e;
        e.n = 6;
        e.arrows = {{0, 1}, {1, 2}, {2, 0}, {3, 0}, {4, 1}, {5, 2}};
        auto ci = chain_invariants_core(e, lam_distinct(6));
        CHECK(ci.s == 4);
        CHECK(ci.c == 2);
        CHECK(ci.witness == std::vector<int>{3, 0, 1, 2});
    }
    SUBCASE("Fermat: all self-loops give (1,0)")
    {
        DirectedGraph e;
        e.n = 6;
        for (int i = 0; i < 6; ++i) e.arrows.emplace_back(i, i);
        auto ci = chain_invariants_core(e, lam_distinct(6));
        CHECK(ci.s == 1);
        CHECK(ci.c == 0);
        CHECK(ci.witness == std::vector<int>{0});
    }
    SUBCASE("repeated weights cap the chain")
    {
        DirectedGraph e;
        e.n = 3;
        e.arrows = {{0, 1}, {1, 2}, {2, 2}};
        std::vector<int> lam = {0, 1, 0}; // vertex 3 shares vertex 1's weight
        auto ci = chain_invariants_core(e, lam);
        CHECK(ci.s == 2);
    }
    SUBCASE("a vertex without out-arrows is an error")
    {
        DirectedGraph e;
        e.n = 3;
        e.arrows = {{0, 1}, {1, 1}};
        CHECK_THROWS_AS(chain_invariants_core(e, lam_distinct(3)), NoFrameEdgeError);
        try {
            chain_invariants_core(e, lam_distinct(3));
        } catch (const NoFrameEdgeError& err) {
            CHECK(err.vertex == 2);
            CHECK(std::string(err.what()).find("no frame edge at vertex 3") != std::string::npos);
        }
    }
}
