#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "prym/character.hpp"
#include "prym/errors.hpp"
#include "prym/group.hpp"
#include "prym/hodge.hpp"

#include "property_suites.hpp"

#include <numeric>
#include <vector>

using namespace prym;

namespace {

int find_perm(const FiniteGroup& G, const std::vector<int>& image) {
    for (int x = 0; x < G.order(); ++x)
        if (G.perm(x) == image) return x;
    REQUIRE(false);
    return -1;
}

long long mu_sum(const CharacterTable& tab, const HodgeDecomposition& hd) {
    long long s = 0;
    for (int r = 0; r < tab.irrep_count; ++r)
        s += static_cast<long long>(tab.degrees[static_cast<size_t>(r)]) *
             hd.mu[static_cast<size_t>(r)];
    return s;
}

} // namespace

TEST_CASE("total genus from the branching data") {
    // Hyperelliptic-style double cover with four branch points: genus one.
    FiniteGroup C2 = make_abelian({2});
    CHECK(genus_total(MonodromyVector{&C2, {1, 1, 1, 1}}) == 1);
    // Six branch points: genus two.
    CHECK(genus_total(MonodromyVector{&C2, {1, 1, 1, 1, 1, 1}}) == 2);

    FiniteGroup C6 = make_abelian({6});
    CHECK(genus_total(MonodromyVector{&C6, {3, 5, 5, 5}}) == 4);

    FiniteGroup D5 = make_permutation_group(5, {{1, 2, 3, 4, 0}, {0, 4, 3, 2, 1}});
    const int f0 = find_perm(D5, {0, 4, 3, 2, 1});   // (2,5)(3,4)
    const int f1 = find_perm(D5, {1, 0, 4, 3, 2});   // (1,2)(3,5)
    const int f2 = find_perm(D5, {4, 3, 2, 1, 0});   // (1,5)(2,4)
    CHECK(genus_total(MonodromyVector{&D5, {find_perm(D5, {3, 2, 1, 0, 4}), f1, f2, f1, f2, f2}}) ==
          6);

    // Parity guard: five double points would give an odd count.
    CHECK_THROWS_AS(genus_total(MonodromyVector{&C2, {1, 1, 1, 1, 1}}), invalid_input);
}

TEST_CASE("monodromy validation") {
    FiniteGroup C6 = make_abelian({6});
    CHECK_NOTHROW(validate_monodromy(MonodromyVector{&C6, {3, 5, 5, 5}}));
    CHECK_THROWS_WITH_AS(validate_monodromy(MonodromyVector{&C6, {3, 3}}),
                         "monodromy vector needs at least 3 entries, got 2", invalid_input);
    CHECK_THROWS_WITH_AS(validate_monodromy(MonodromyVector{&C6, {0, 3, 3}}),
                         "monodromy entry 1 is the identity (trivial branch points are not stored)",
                         invalid_input);
    CHECK_THROWS_WITH_AS(validate_monodromy(MonodromyVector{&C6, {3, 3, 3}}),
                         "monodromy entries do not multiply to the identity", invalid_input);
    CHECK_THROWS_WITH_AS(validate_monodromy(MonodromyVector{&C6, {2, 2, 2}}),
                         "monodromy entries do not generate the group", invalid_input);
    CHECK_THROWS_AS(validate_monodromy(MonodromyVector{&C6, {3, 7, 5}}), invalid_input);
    CHECK(family_dimension(MonodromyVector{&C6, {3, 5, 5, 5}}) == 1);
}

TEST_CASE("holomorphic differentials split by irreducible") {
    // Cyclic six-fold cover: multiplicities known in closed form.
    FiniteGroup C6 = make_abelian({6});
    CharacterTable tab = character_table(C6);
    MonodromyVector mv{&C6, {3, 5, 5, 5}};
    HodgeDecomposition hd = chevalley_weil(mv, tab);
    CHECK(hd.g_tilde == 4);
    CHECK(mu_sum(tab, hd) == 4);

    // Identify rows by the value at a generator: chi_j(1) = zeta_6^j.
    const int c1 = tab.classes.class_of[1];
    std::vector<long long> by_power(6, -1);
    for (int r = 0; r < 6; ++r)
        for (int j = 0; j < 6; ++j)
            if (tab.values[static_cast<size_t>(r)][static_cast<size_t>(c1)] ==
                Cyclotomic::zeta_power(6, j))
                by_power[static_cast<size_t>(j)] = hd.mu[static_cast<size_t>(r)];
    CHECK(by_power == std::vector<long long>{0, 0, 0, 1, 1, 2});

    // Branch data determines the same numbers through the class-count path.
    std::vector<int> counts(static_cast<size_t>(tab.classes.count), 0);
    for (int x : mv.entries) ++counts[static_cast<size_t>(tab.classes.class_of[static_cast<size_t>(x)])];
    CHECK(multiplicities_from_class_counts(tab, counts) == hd.mu);
    CHECK(genus_from_class_counts(*mv.group, tab.classes, counts) == hd.g_tilde);
}

TEST_CASE("dihedral decompositions") {
    // Five points, six branch points of the pinned shape: 2 sign + each plane row once.
    FiniteGroup D5 = make_permutation_group(5, {{1, 2, 3, 4, 0}, {0, 4, 3, 2, 1}});
    CharacterTable tab = character_table(D5);
    const int f1 = find_perm(D5, {1, 0, 4, 3, 2});
    const int f2 = find_perm(D5, {4, 3, 2, 1, 0});
    MonodromyVector mv{&D5, {find_perm(D5, {3, 2, 1, 0, 4}), f1, f2, f1, f2, f2}};
    HodgeDecomposition hd = chevalley_weil(mv, tab);
    CHECK(hd.g_tilde == 6);
    CHECK(mu_sum(tab, hd) == 6);
    for (int r = 0; r < 4; ++r) {
        const long long want =
            r == tab.trivial_index ? 0 : (tab.degrees[static_cast<size_t>(r)] == 1 ? 2 : 1);
        CHECK(hd.mu[static_cast<size_t>(r)] == want);
    }

    // Three points, ten branch points: 4 sign + 3 plane.
    FiniteGroup D3 = make_permutation_group(3, {{0, 2, 1}, {1, 2, 0}});
    CharacterTable t3 = character_table(D3);
    const int s12 = find_perm(D3, {1, 0, 2});
    const int s13 = find_perm(D3, {2, 1, 0});
    const int s23 = find_perm(D3, {0, 2, 1});
    MonodromyVector m3{&D3, {s23, s23, s12, s12, s13, s23, s12, s13, s13, s23}};
    HodgeDecomposition h3 = chevalley_weil(m3, t3);
    CHECK(h3.g_tilde == 10);
    CHECK(h3.mu[static_cast<size_t>(t3.trivial_index)] == 0);
    CHECK(h3.mu[0] == 4);   // sign row sorts first
    CHECK(h3.mu[2] == 3);
    CHECK(mu_sum(t3, h3) == 10);
}

TEST_CASE("invariant part under a normal subgroup") {
    FiniteGroup C6 = make_abelian({6});
    CharacterTable tab = character_table(C6);
    MonodromyVector mv{&C6, {3, 5, 5, 5}};
    HodgeDecomposition hd = chevalley_weil(mv, tab);
    NormalSubgroup K = make_normal_subgroup(C6, {2});
    PlusPart pp = plus_part(hd, tab, K);
    CHECK(pp.g == 1);
    // mu_plus keeps exactly the rows trivial on K.
    long long total = 0;
    for (int r = 0; r < tab.irrep_count; ++r) {
        if (tab.kernel_contains(r, K))
            CHECK(pp.mu_plus[static_cast<size_t>(r)] == hd.mu[static_cast<size_t>(r)]);
        else
            CHECK(pp.mu_plus[static_cast<size_t>(r)] == 0);
        total += static_cast<long long>(tab.degrees[static_cast<size_t>(r)]) *
                 pp.mu_plus[static_cast<size_t>(r)];
    }
    CHECK(total == pp.g);

    // Quotient by the full group leaves the base genus 0; by the trivial
    // subgroup, everything.
    PlusPart all = plus_part(hd, tab, make_normal_subgroup(C6, {1}));
    CHECK(all.g == 0);
    PlusPart none = plus_part(hd, tab, make_normal_subgroup(C6, std::vector<int>{}));
    CHECK(none.g == hd.g_tilde);
}

TEST_CASE("first family member: genus arithmetic") {
    // k = 3 member of the first closed-form family: total genus 2k - 2 = 4.
    FiniteGroup G = make_abelian({2, 6});
    CharacterTable tab = character_table(G);
    // Entries (1,0), (0,3), (0,2), (1,1).
    MonodromyVector mv{&G, {6, 3, 2, 7}};
    HodgeDecomposition hd = chevalley_weil(mv, tab);
    CHECK(hd.g_tilde == 4);
    CHECK(mu_sum(tab, hd) == 4);
    NormalSubgroup K = make_normal_subgroup(G, {9});   // (1,3)
    CHECK(plus_part(hd, tab, K).g == 2);
}

TEST_CASE("property: differential counts against the genus formula") {
    prop::SuiteResult res = prop::suite_cw_vs_rh(150);
    CHECK_MESSAGE(res.ok(), res.report());
    CHECK(res.cases >= 150);
}

TEST_CASE("property: closed-form multiplicities for commutative groups") {
    prop::SuiteResult res = prop::suite_abelian_specialization(150);
    CHECK_MESSAGE(res.ok(), res.report());
    CHECK(res.cases >= 150);
}
