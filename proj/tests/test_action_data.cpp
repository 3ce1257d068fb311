#include <doctest.h>

#include "hsym/action_data.hpp"
#include "hsym/catalog.hpp"
#include "hsym/rng.hpp"
#include "hsym/smooth.hpp"

using namespace hsym;

namespace {

ActionData twist(const ActionData& I, const std::vector<std::int64_t>& xi)
{
    std::vector<Character> w = I.weights;
    Character t = I.target;
    for (std::size_t k = 0; k < I.pres.factors.size(); ++k) {
        for (auto& ch : w) ch.c[k] += xi[k];
        t.c[k] += mul64(I.d, xi[k]);
    }
    return make_action_data(I.d, I.n, I.pres, std::move(w), std::move(t));
}

ActionData permute(const ActionData& I, const std::vector<int>& sigma)
{
    std::vector<Character> w(static_cast<std::size_t>(I.n));
    for (int i = 0; i < I.n; ++i) w[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])] = I.weights[static_cast<std::size_t>(i)];
    return make_action_data(I.d, I.n, I.pres, std::move(w), I.target);
}

} // namespace

TEST_CASE("invariant monomials of catalog data")
{
    SUBCASE("the C8 cubic class")
    {
        const CatalogCase& c = catalog_case("main-2");
        ActionData I = catalog_action(c);
        Support s = invariant_monomials(I);
        CHECK(s == parse_support(3, 6, c.claimed_support));
        CHECK(s.size() == 8);
    }
    SUBCASE("trivial group fixes everything")
    {
        std::vector<Character> w(4);
        ActionData I = make_action_data(3, 4, AbelianPresentation{}, w, Character{});
        CHECK(invariant_monomials(I).size() == 20);
    }
    SUBCASE("the C12 quartic class")
    {
        const CatalogCase& c = catalog_case("main2-5");
        ActionData I = catalog_action(c);
        CHECK(invariant_monomials(I) == parse_support(4, 4, c.claimed_support));
    }
}

TEST_CASE("equivalence of data")
{
    ActionData I = catalog_action(catalog_case("main-2"));

    SUBCASE("any explicit twist is equivalent and has the same invariant set")
    {
        SplitMix64 rng(404);
        for (int t = 0; t < 10; ++t) {
            std::vector<std::int64_t> xi;
            for (auto f : I.pres.factors) xi.push_back(static_cast<std::int64_t>(rng.range(0, static_cast<std::uint64_t>(f - 1))));
            ActionData J = twist(I, xi);
            CHECK(are_equivalent(I, J));
            CHECK(invariant_monomials(I) == invariant_monomials(J));
        }
    }
    SUBCASE("the two C9 quartic classes are inequivalent")
    {
        ActionData a = catalog_action(catalog_case("main2-3"));
        ActionData b = catalog_action(catalog_case("main2-4"));
        CHECK_FALSE(are_equivalent(a, b));
    }
    SUBCASE("twisting only the target is not an equivalence when d is coprime to the exponent")
    {
        // C5 in degree 3: xi^3 is nontrivial for nontrivial xi, and the
        // weights are untouched, so no character can compensate.
        std::vector<Character> w = {Character{{1}}, Character{{2}}, Character{{0}}};
        ActionData a = make_action_data(3, 3, AbelianPresentation{{5}}, w, Character{{0}});
        ActionData b = make_action_data(3, 3, AbelianPresentation{{5}}, w, Character{{3}});
        CHECK_FALSE(are_equivalent(a, b));
        // ...but a target twist by xi^d with trivial xi^d is the same data
        ActionData c = make_action_data(3, 3, AbelianPresentation{{5}}, w, Character{{0}});
        CHECK(are_equivalent(a, c));
    }
    SUBCASE("mismatched shapes are incomparable")
    {
        ActionData a = catalog_action(catalog_case("main2-3"));
        CHECK_THROWS_AS((void)are_equivalent(I, a), IncomparableDataError);
    }
}

TEST_CASE("induced data")
{
    ActionData I = catalog_action(catalog_case("main-2")); // C8

    SUBCASE("inducing along the full group is an equivalence")
    {
        ActionData J = induce(I, {{1}});
        CHECK(J.pres == I.pres);
        CHECK(are_equivalent(I, J));
    }
    SUBCASE("the index-two subgroup strictly enlarges the invariant set")
    {
        ActionData J = induce(I, {{2}});
        REQUIRE(J.pres.factors.size() == 1);
        CHECK(J.pres.factors[0] == 4);
        Support si = invariant_monomials(I);
        Support sj = invariant_monomials(J);
        CHECK(sj.size() > si.size());
        for (const auto& m : si.mons) CHECK(sj.contains(m));
    }
    SUBCASE("the trivial subgroup fixes every monomial")
    {
        ActionData J = induce(I, {});
        CHECK(J.pres.factors.empty());
        CHECK(invariant_monomials(J).size() == 56);
    }
    SUBCASE("monotonicity over random subgroups of catalog groups")
    {
        SplitMix64 rng(8080);
        for (const char* label : {"main-3", "main-7", "main2-5"}) {
            ActionData base = catalog_action(catalog_case(label));
            Support s_base = invariant_monomials(base);
            for (int t = 0; t < 8; ++t) {
                std::vector<std::int64_t> g;
                for (auto f : base.pres.factors) g.push_back(static_cast<std::int64_t>(rng.range(0, static_cast<std::uint64_t>(f - 1))));
                ActionData J = induce(base, {g});
                Support sj = invariant_monomials(J);
                for (const auto& m : s_base.mons) CHECK(sj.contains(m));
            }
        }
    }
    SUBCASE("malformed generators are rejected")
    {
        CHECK_THROWS_AS(induce(I, {{1, 0}}), std::invalid_argument);
    }
}

TEST_CASE("group structure reporting")
{
    CHECK(group_structure(catalog_action(catalog_case("main-1"))).factors == std::vector<std::int64_t>{6});
    CHECK(group_structure(catalog_action(catalog_case("main-7"))).factors == std::vector<std::int64_t>{6, 6});
    CHECK(group_structure(catalog_action(catalog_case("main-8"))).factors == std::vector<std::int64_t>{2, 2, 6});
    std::vector<Character> w(3);
    CHECK(group_structure(make_action_data(3, 3, AbelianPresentation{}, w, Character{})).factors.empty());
}

TEST_CASE("group structure is permutation invariant")
{
    ActionData I = catalog_action(catalog_case("main-8"));
    std::vector<int> sigma = {3, 0, 5, 1, 4, 2};
    CHECK(group_structure(permute(I, sigma)) == group_structure(I));
}

TEST_CASE("equal-weight stabilizers")
{
    SUBCASE("Y(2,1) support has stabilizer C8")
    {
        auto st = equal_weight_stabilizer(make_kty(KtyKind::Y, 3, 2, 1).support());
        CHECK(st.free_rank == 0);
        CHECK(st.group.structure.factors == std::vector<std::int64_t>{8});
    }
    SUBCASE("Fermat cubic in three variables: C3 x C3")
    {
        std::vector<Monomial> f;
        for (int i = 0; i < 3; ++i) {
            Monomial m;
            m.e[static_cast<std::size_t>(i)] = 3;
            f.push_back(m);
        }
        auto st = equal_weight_stabilizer(Support::of(3, 3, f));
        CHECK(st.free_rank == 0);
        CHECK(st.group.structure.factors == std::vector<std::int64_t>{3, 3});
        CHECK(st.group.order() == 9);
    }
    SUBCASE("all monomials force the trivial group")
    {
        auto st = equal_weight_stabilizer(Support::of(3, 4, enumerate_monomials(3, 4)));
        CHECK(st.free_rank == 0);
        CHECK(st.group.order() == 1);
    }
    SUBCASE("the stabilizer of S_I contains the image of G")
    {
        for (const char* label : {"main-1", "main-5", "main2-2"}) {
            ActionData I = catalog_action(catalog_case(label));
            auto st = equal_weight_stabilizer(invariant_monomials(I));
            auto stab_elems = st.group.elements();
            std::set<TorusVec> stab_set(stab_elems.begin(), stab_elems.end());
            std::int64_t den = 1;
            for (auto f : I.pres.factors) den = lcm64(den, f);
            detail::for_each_tuple(I.pres, [&](const std::vector<std::int64_t>& g) {
                TorusVec v(I.n, den);
                for (int i = 0; i < I.n; ++i) {
                    std::int64_t acc = 0;
                    for (std::size_t k = 0; k < I.pres.factors.size(); ++k)
                        acc = posmod64(acc + mul64(mul64(I.weights[static_cast<std::size_t>(i)].c[k], g[k]),
                                                   den / I.pres.factors[k]),
                                       den);
                    v.num[static_cast<std::size_t>(i)] = acc;
                }
                CHECK(stab_set.count(v.canon_mod_diag()) == 1);
            });
        }
    }
}

TEST_CASE("faithfulness is enforced at construction")
{
    // lambda_1 = lambda_2 on C2 with two variables: the generator acts as a
    // scalar, so the projective action has a kernel.
    std::vector<Character> w = {Character{{1}}, Character{{1}}};
    CHECK_THROWS_AS(make_action_data(3, 2, AbelianPresentation{{2}}, w, Character{{0}}), std::invalid_argument);
}

TEST_CASE("canonical form")
{
    SUBCASE("permutation and twist invariance")
    {
        SplitMix64 rng(1234);
        for (const char* label : {"main-2", "main-7", "main2-4"}) {
            ActionData I = catalog_action(catalog_case(label));
            std::string key = canonical_form(I);
            std::vector<int> sigma(static_cast<std::size_t>(I.n));
            for (int i = 0; i < I.n; ++i) sigma[static_cast<std::size_t>(i)] = i;
            for (int t = 0; t < 4; ++t) {
                for (std::size_t i = sigma.size(); i > 1; --i) std::swap(sigma[i - 1], sigma[rng.next() % i]);
                CHECK(canonical_form(permute(I, sigma)) == key);
                std::vector<std::int64_t> xi;
                for (auto f : I.pres.factors) xi.push_back(static_cast<std::int64_t>(rng.range(0, static_cast<std::uint64_t>(f - 1))));
                CHECK(canonical_form(twist(permute(I, sigma), xi)) == key);
            }
        }
    }
    SUBCASE("non-closed data: the induced C4 keys apart from its closure")
    {
        ActionData I = catalog_action(catalog_case("main-2"));
        ActionData J = induce(I, {{2}});
        CHECK(canonical_form(J) != canonical_form(I));
        SplitMix64 rng(55);
        std::string key = canonical_form(J);
        std::vector<int> sigma = {0, 1, 2, 3, 4, 5};
        for (int t = 0; t < 3; ++t) {
            for (std::size_t i = sigma.size(); i > 1; --i) std::swap(sigma[i - 1], sigma[rng.next() % i]);
            CHECK(canonical_form(permute(J, sigma)) == key);
        }
    }
    SUBCASE("the four C2 x C4 cubic classes: 3 and 4 differ")
    {
        CHECK(canonical_form(catalog_action(catalog_case("main-3"))) !=
              canonical_form(catalog_action(catalog_case("main-4"))));
    }
    SUBCASE("cases 5 and 6 are the same class up to the swap of x4 and x6")
    {
        // A genuine redundancy in the listed classification: the supports
        // and groups match under the transposition, so the keys agree.
        CHECK(canonical_form(catalog_action(catalog_case("main-5"))) ==
              canonical_form(catalog_action(catalog_case("main-6"))));
        ActionData I5 = catalog_action(catalog_case("main-5"));
        ActionData I6 = catalog_action(catalog_case("main-6"));
        std::vector<int> swap46 = {0, 1, 2, 5, 4, 3};
        CHECK(invariant_monomials(permute(I5, swap46)) == invariant_monomials(I6));
    }
    SUBCASE("catalog keys: 12 distinct among 13 labels")
    {
        std::map<std::string, std::vector<std::string>> by_key;
        for (const auto& c : catalog_cases()) by_key[canonical_form(catalog_action(c))].push_back(c.label);
        CHECK(by_key.size() == 12);
        for (const auto& [k, labels] : by_key) {
            if (labels.size() > 1) {
                REQUIRE(labels.size() == 2);
                CHECK(labels[0] == "main-5");
                CHECK(labels[1] == "main-6");
            }
        }
    }
    SUBCASE("weight relation lattice equals the difference lattice on closed data")
    {
        for (const char* label : {"main-2", "main2-5"}) {
            ActionData I = catalog_action(catalog_case(label));
            Support s = invariant_monomials(I);
            Lattice lam = weight_relation_lattice(I);
            Lattice diffs(I.n);
            for (int i = 1; i < s.size(); ++i)
                diffs.add(diff_vector(s.mons[static_cast<std::size_t>(i)], s.mons[0], I.n));
            CHECK(lam == diffs);
        }
    }
}
