#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "prym/errors.hpp"
#include "prym/group.hpp"

#include "property_suites.hpp"

#include <algorithm>

using namespace prym;

TEST_CASE("abelian construction and mixed-radix indexing") {
    FiniteGroup G = make_abelian({2, 6});
    CHECK(G.order() == 12);
    CHECK(G.commutative());
    CHECK(G.kind() == FiniteGroup::Kind::abelian);
    CHECK(G.token() == "abelian[2,6]");
    CHECK(G.factors() == std::vector<int>{2, 6});
    CHECK(G.exponent() == 6);
    // Index = a*6 + b for residues (a, b); the last factor varies fastest.
    CHECK(G.element_name(9) == "1,3");
    CHECK(G.element_name(0) == "0,0");
    CHECK(G.mul(9, 10) == 1);   // (1,3) + (1,4) = (0,1)
    CHECK(G.inv(9) == 9);       // (1,3) is an involution
    CHECK(G.element_order(9) == 2);
    CHECK(G.element_order(7) == 6);   // (1,1)
    CHECK(G.element_order(0) == 1);

    CHECK_THROWS_AS(make_abelian({}), invalid_input);
    CHECK_THROWS_AS(make_abelian({1, 4}), invalid_input);
    CHECK_THROWS_AS(make_abelian({2, 4096}), too_large);
}

TEST_CASE("permutation construction, identity index, composition order") {
    FiniteGroup D3 = make_permutation_group(3, {{0, 2, 1}, {1, 2, 0}});   // (2,3), (1,2,3)
    CHECK(D3.order() == 6);
    CHECK(!D3.commutative());
    CHECK(D3.kind() == FiniteGroup::Kind::permutation);
    CHECK(D3.token() == "perm[3;(2,3);(1,2,3)]");
    CHECK(D3.degree() == 3);
    CHECK(D3.perm(0) == std::vector<int>{0, 1, 2});   // identity sorts first
    CHECK(D3.element_name(0) == "()");
    CHECK(D3.exponent() == 6);

    // Composition applies the right factor first: (2,3) after (1,2,3) is (1,3).
    int refl = -1, rot = -1;
    for (int x = 0; x < 6; ++x) {
        if (D3.perm(x) == std::vector<int>{0, 2, 1}) refl = x;
        if (D3.perm(x) == std::vector<int>{1, 2, 0}) rot = x;
    }
    REQUIRE(refl >= 0);
    REQUIRE(rot >= 0);
    const int prod = D3.mul(refl, rot);
    CHECK(D3.perm(prod) == std::vector<int>{2, 1, 0});
    CHECK(D3.element_name(prod) == "(1,3)");

    CHECK_THROWS_AS(make_permutation_group(3, {{0, 0, 1}}), invalid_input);
    CHECK_THROWS_AS(make_permutation_group(3, {{0, 2}}), invalid_input);
    // Closure cap: S4 has 24 elements.
    CHECK_THROWS_AS(make_permutation_group(4, {{1, 2, 3, 0}, {1, 0, 2, 3}}, 10), too_large);
    // Dense-table bound: S7 has 5040 > 4096 elements.
    CHECK_THROWS_AS(
        make_permutation_group(7, {{1, 2, 3, 4, 5, 6, 0}, {1, 0, 2, 3, 4, 5, 6}}), too_large);
}

TEST_CASE("broken multiplication tables are rejected") {
    // Start from C3 and corrupt one entry.
    FiniteGroup C3 = make_abelian({3});
    std::vector<uint16_t> table(9);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            table[static_cast<size_t>(a * 3 + b)] = static_cast<uint16_t>(C3.mul(a, b));
    CHECK_NOTHROW(FiniteGroup::from_table(table, 3, FiniteGroup::Kind::abelian, "c3"));
    auto bad = table;
    bad[4] = 0;   // 1*1 = 0 breaks associativity / unique solvability
    CHECK_THROWS_AS(FiniteGroup::from_table(bad, 3, FiniteGroup::Kind::abelian, "bad"),
                    invalid_input);
    CHECK_THROWS_AS(FiniteGroup::from_table(table, 2, FiniteGroup::Kind::abelian, "size"),
                    invalid_input);
}

TEST_CASE("conjugacy classes of D3 and C6") {
    FiniteGroup D3 = make_permutation_group(3, {{0, 2, 1}, {1, 2, 0}});
    ConjugacyClasses cc = conjugacy_classes(D3);
    CHECK(cc.count == 3);
    CHECK(cc.representatives[0] == 0);
    std::vector<int> sizes = cc.sizes;
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{1, 2, 3});
    // Members ascending, classes keyed by minimal member.
    for (int c = 0; c < cc.count; ++c) {
        CHECK(std::is_sorted(cc.members[static_cast<size_t>(c)].begin(),
                             cc.members[static_cast<size_t>(c)].end()));
        CHECK(cc.members[static_cast<size_t>(c)].front() ==
              cc.representatives[static_cast<size_t>(c)]);
        CHECK(cc.rep_order[static_cast<size_t>(c)] ==
              D3.element_order(cc.representatives[static_cast<size_t>(c)]));
    }
    // power_class and inverse_class consistency.
    for (int c = 0; c < cc.count; ++c) {
        CHECK(cc.power_class(c, 1) == c);
        const int rep = cc.representatives[static_cast<size_t>(c)];
        CHECK(cc.inverse_class[static_cast<size_t>(c)] ==
              cc.class_of[static_cast<size_t>(D3.inv(rep))]);
        CHECK(cc.power_class(c, 2) ==
              cc.class_of[static_cast<size_t>(D3.mul(rep, rep))]);
    }

    FiniteGroup C6 = make_abelian({6});
    ConjugacyClasses cc6 = conjugacy_classes(C6);
    CHECK(cc6.count == 6);
    for (int c = 0; c < 6; ++c) CHECK(cc6.sizes[static_cast<size_t>(c)] == 1);
}

TEST_CASE("closures, generation, cyclic membership") {
    FiniteGroup G = make_abelian({2, 6});
    CHECK(subgroup_closure(G, {}).size() == 1);
    CHECK(subgroup_closure(G, {9}).size() == 2);        // (1,3)
    CHECK(subgroup_closure(G, {7}).size() == 6);        // (1,1) has order 6
    CHECK(is_generating(G, {6, 1}));                    // (1,0), (0,1)
    CHECK(!is_generating(G, {2, 3}));                   // (0,2), (0,3) span only 0 x C6
    CHECK(cyclic_subgroup_contains(G, 7, 2));           // (1,1)^2 = (0,2)
    CHECK(!cyclic_subgroup_contains(G, 2, 7));
    CHECK(cyclic_subgroup_contains(G, 0, 0));
}

TEST_CASE("normality and subgroup construction") {
    FiniteGroup D3 = make_permutation_group(3, {{0, 2, 1}, {1, 2, 0}});
    int refl = -1, rot = -1;
    for (int x = 0; x < 6; ++x) {
        if (D3.perm(x) == std::vector<int>{0, 2, 1}) refl = x;
        if (D3.perm(x) == std::vector<int>{1, 2, 0}) rot = x;
    }
    CHECK(is_normal(D3, subgroup_closure(D3, {rot})));
    CHECK(!is_normal(D3, subgroup_closure(D3, {refl})));
    CHECK_THROWS_AS(make_normal_subgroup(D3, {refl}), invalid_input);

    // The unchecked constructor accepts the same subgroup.
    NormalSubgroup H = subgroup_from_generators(D3, {refl});
    CHECK(H.order() == 2);
    CHECK(H.index == 3);
    CHECK(H.contains(refl));
    CHECK(H.contains(0));
    CHECK(!H.contains(rot));
    CHECK(H.generators == std::vector<int>{refl});

    NormalSubgroup R = make_normal_subgroup(D3, {rot});
    CHECK(R.order() == 3);
    CHECK(std::is_sorted(R.elements.begin(), R.elements.end()));

    CHECK_THROWS_AS(subgroup_from_generators(D3, {17}), invalid_input);
}

TEST_CASE("quotients") {
    FiniteGroup G = make_abelian({2, 6});
    NormalSubgroup K = make_normal_subgroup(G, {9});   // (1,3)
    QuotientGroup Q = quotient_group(G, K);
    CHECK(Q.group.order() == 6);
    CHECK(Q.group.commutative());
    CHECK(Q.group.kind() == FiniteGroup::Kind::quotient);
    CHECK(Q.projection.size() == 12);
    CHECK(Q.projection[0] == 0);
    CHECK(Q.projection[9] == 0);
    // Projection is a homomorphism.
    for (int a = 0; a < 12; ++a)
        for (int b = 0; b < 12; ++b)
            CHECK(Q.projection[static_cast<size_t>(G.mul(a, b))] ==
                  Q.group.mul(Q.projection[static_cast<size_t>(a)],
                              Q.projection[static_cast<size_t>(b)]));
    // The quotient by (1,3) is cyclic of order 6: some element has full order.
    bool has_order6 = false;
    for (int x = 0; x < 6; ++x) has_order6 = has_order6 || Q.group.element_order(x) == 6;
    CHECK(has_order6);

    FiniteGroup D3 = make_permutation_group(3, {{0, 2, 1}, {1, 2, 0}});
    int rot = -1;
    for (int x = 0; x < 6; ++x)
        if (D3.perm(x) == std::vector<int>{1, 2, 0}) rot = x;
    QuotientGroup Q2 = quotient_group(D3, make_normal_subgroup(D3, {rot}));
    CHECK(Q2.group.order() == 2);

    // Quotient by the whole group is trivial.
    QuotientGroup Q3 = quotient_group(G, make_normal_subgroup(G, {6, 1}));
    CHECK(Q3.group.order() == 1);
}

TEST_CASE("all normal subgroups, counts and deterministic order") {
    auto count_normal = [](const FiniteGroup& G) {
        ConjugacyClasses cc = conjugacy_classes(G);
        std::vector<NormalSubgroup> all = all_normal_subgroups(G, cc);
        // Deterministic order: by order then element list; nontrivial ends.
        for (size_t i = 1; i < all.size(); ++i) {
            const bool ordered =
                all[i - 1].order() < all[i].order() ||
                (all[i - 1].order() == all[i].order() && all[i - 1].elements < all[i].elements);
            CHECK(ordered);
        }
        CHECK(all.front().order() == 1);
        CHECK(all.back().order() == G.order());
        for (const NormalSubgroup& H : all) CHECK(is_normal(G, H.elements));
        return all.size();
    };
    CHECK(count_normal(make_abelian({6})) == 4);
    CHECK(count_normal(make_abelian({2, 6})) == 10);
    CHECK(count_normal(make_permutation_group(3, {{0, 2, 1}, {1, 2, 0}})) == 3);   // D3
    CHECK(count_normal(*prop::dihedral(4)) == 6);
    CHECK(count_normal(*prop::quaternion8()) == 6);
    CHECK(count_normal(*prop::alternating4()) == 3);
}

TEST_CASE("catalog helper groups used by the tests") {
    CHECK(prop::dihedral(5)->order() == 10);
    CHECK(prop::dihedral(16)->order() == 32);
    CHECK(prop::quaternion8()->order() == 8);
    CHECK(prop::alternating4()->order() == 12);
    // Q8 has a unique involution.
    auto Qp = prop::quaternion8();
    const FiniteGroup& Q = *Qp;
    int involutions = 0;
    for (int x = 1; x < 8; ++x)
        if (Q.element_order(x) == 2) ++involutions;
    CHECK(involutions == 1);
}
