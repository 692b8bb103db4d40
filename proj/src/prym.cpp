#include "prym/prym.hpp"
#include "prym/errors.hpp"

#include <algorithm>
#include <string>

namespace prym {

namespace {

// Per-branch-point ramification data for the upper cover.
struct RamData {
    long long r = 0;        // ramified points, all branch points together
    long long ram_sum = 0;  // sum over all points of (e_P - 1)
};

// Direct orbit count over cosets, no normality shortcut.
RamData ramification_data(const PrymDatum& datum) {
    const FiniteGroup& G = *datum.group;
    const int n = G.order();
    RamData out;
    std::vector<char> visited(static_cast<size_t>(n));
    for (int x : datum.mv) {
        std::vector<int> H = subgroup_closure(G, {x});
        std::fill(visited.begin(), visited.end(), 0);
        long long e_first = -1;
        for (int t = 0; t < n; ++t) {
            if (visited[static_cast<size_t>(t)]) continue;
            long long e = 0;
            for (int h : H) {
                visited[static_cast<size_t>(G.mul(t, h))] = 1;
                if (datum.K.contains(G.conj(t, h))) ++e;
            }
            if (e_first < 0) e_first = e;
            else if (e != e_first)
                throw internal_inconsistency(
                    "ramification index varies over the fibre of a normal subgroup");
            if (e > 1) ++out.r;
            out.ram_sum += e - 1;
        }
    }
    return out;
}

} // namespace

CriteriaFlags check_criteria(long long Ntilde, long long N, long long s, long long g_tilde,
                             long long g) {
    CriteriaFlags f;
    f.noninjective = (Ntilde - N) < (s - 3);
    f.constant_prym = (Ntilde == N);
    f.xiao = 2 * (g_tilde - g) > g_tilde + 1;
    return f;
}

void validate(const PrymDatum& datum) {
    if (datum.group == nullptr) throw invalid_input("datum has no group");
    const FiniteGroup& G = *datum.group;
    if (datum.K.parent != datum.group)
        throw invalid_input("K was built for a different group");
    validate_monodromy(datum.monodromy());
    if (!is_normal(G, datum.K.elements))
        throw invalid_input("K is not a normal subgroup");
    const long long d = datum.K.order();
    if (d < 2) throw invalid_input("K is trivial: the tower needs a cover of degree >= 2");
    if (d >= G.order())
        throw invalid_input("K is the whole group: the intermediate curve would equal the base");
    if (d == 2) {
        const int sigma = datum.K.elements[1];
        for (int t = 0; t < G.order(); ++t)
            if (G.conj(t, sigma) != sigma)
                throw invalid_input("the involution generating K is not central");
    }
}

long long ramification_r(const PrymDatum& datum) {
    RamData rd = ramification_data(datum);
    if (datum.K.order() == 2) {
        const FiniteGroup& G = *datum.group;
        const int sigma = datum.K.elements[1];
        long long r2 = 0;
        for (int x : datum.mv)
            if (cyclic_subgroup_contains(G, x, sigma)) r2 += G.order() / G.element_order(x);
        if (r2 != rd.r)
            throw internal_inconsistency("degree-2 ramification formula disagrees with orbit count");
    }
    return rd.r;
}

long long sym2_invariants_from_multiplicities(const CharacterTable& tab,
                                              const std::vector<long long>& mult) {
    if (mult.size() != static_cast<size_t>(tab.irrep_count))
        throw internal_inconsistency("multiplicity vector has wrong length");
    long long acc = 0;
    for (int r = 0; r < tab.irrep_count; ++r) {
        const long long mu = mult[static_cast<size_t>(r)];
        if (mu < 0) throw internal_inconsistency("negative multiplicity");
        const int dual = tab.dual[static_cast<size_t>(r)];
        if (dual == r) {
            const int fs = tab.frobenius_schur[static_cast<size_t>(r)];
            if (fs != 1 && fs != -1)
                throw internal_inconsistency("self-dual row with indicator not +-1");
            acc += mu * (mu + fs) / 2;
        } else if (r < dual) {
            acc += mu * mult[static_cast<size_t>(dual)];
        }
    }
    return acc;
}

CoverInvariants invariants_from_class_counts(const CharacterTable& tab,
                                             const std::vector<int>& counts,
                                             const NormalSubgroup& K) {
    const FiniteGroup& G = *tab.group;
    const ConjugacyClasses& cc = tab.classes;
    CoverInvariants inv;
    inv.d = K.order();
    for (int t : counts) inv.s += t;
    inv.family_dim = inv.s - 3;

    std::vector<long long> mu = multiplicities_from_class_counts(tab, counts);
    std::vector<long long> mu_plus(mu.size(), 0), mu_minus(mu.size(), 0);
    for (int r = 0; r < tab.irrep_count; ++r) {
        if (tab.kernel_contains(r, K)) mu_plus[static_cast<size_t>(r)] = mu[static_cast<size_t>(r)];
        else mu_minus[static_cast<size_t>(r)] = mu[static_cast<size_t>(r)];
        inv.g_tilde += tab.degrees[static_cast<size_t>(r)] * mu[static_cast<size_t>(r)];
        inv.g += tab.degrees[static_cast<size_t>(r)] * mu_plus[static_cast<size_t>(r)];
    }
    inv.q_h = inv.g_tilde - inv.g;

    inv.Ntilde = sym2_invariants_from_multiplicities(tab, mu);
    inv.N = sym2_invariants_from_multiplicities(tab, mu_plus);
    const long long M = sym2_invariants_from_multiplicities(tab, mu_minus);
    if (inv.Ntilde - inv.N != M)
        throw internal_inconsistency("S^2 dimensions do not split across the plus/minus parts");
    if (inv.N < 0 || M < 0)
        throw internal_inconsistency("negative S^2 invariant dimension");

    // Ramification of the upper cover: K normal makes the index constant on
    // each fibre, so each class contributes all |G|/ord points or none.
    for (int c = 0; c < cc.count; ++c) {
        const int t = counts[static_cast<size_t>(c)];
        if (t == 0) continue;
        const int rep = cc.representatives[static_cast<size_t>(c)];
        const long long m = G.element_order(rep);
        long long e = 0;
        int h = 0;
        do {
            if (K.contains(h)) ++e;
            h = G.mul(h, rep);
        } while (h != 0);
        if (e > 1) inv.r += static_cast<long long>(t) * (G.order() / m);
    }

    CriteriaFlags f = check_criteria(inv.Ntilde, inv.N, inv.s, inv.g_tilde, inv.g);
    inv.noninjective = f.noninjective;
    inv.constant_prym = f.constant_prym;
    inv.xiao = f.xiao;
    return inv;
}

CoverInvariants compute_invariants(const PrymDatum& datum, const CharacterTable& tab) {
    validate(datum);
    const FiniteGroup& G = *datum.group;
    if (tab.group != datum.group)
        throw invalid_input("character table was built for a different group");
    const ConjugacyClasses& cc = tab.classes;

    std::vector<int> counts(static_cast<size_t>(cc.count), 0);
    for (int x : datum.mv) counts[static_cast<size_t>(cc.class_of[static_cast<size_t>(x)])]++;

    CoverInvariants inv = invariants_from_class_counts(tab, counts, datum.K);

    // Character-level recomputation of the three S^2 dimensions.
    HodgeDecomposition hd = chevalley_weil(datum.monodromy(), tab);
    PlusPart pp = plus_part(hd, tab, datum.K);
    if (hd.g_tilde != inv.g_tilde || pp.g != inv.g)
        throw internal_inconsistency("class-count genus disagrees with character-level genus");
    const Character s2_all = symmetric_square_character(tab, hd.chi_V);
    const Character s2_plus = symmetric_square_character(tab, pp.chi_plus);
    const Character s2_minus = symmetric_square_character(tab, pp.chi_minus);
    const Character triv = trivial_character(tab);
    const Rational nt = inner_product(tab, s2_all, triv);
    const Rational np = inner_product(tab, s2_plus, triv);
    const Rational nm = inner_product(tab, s2_minus, triv);
    if (nt != Rational(inv.Ntilde) || np != Rational(inv.N) ||
        nm != Rational(inv.Ntilde - inv.N))
        throw internal_inconsistency(
            "S^2 invariant dimensions from characters disagree with indicator counts");

    // Quotient curve: project the monodromy vector, drop trivial entries, and
    // the genus of the resulting cover of the line must equal g.
    QuotientGroup Q = quotient_group(G, datum.K);
    std::vector<int> proj;
    for (int x : datum.mv) {
        const int y = Q.projection[static_cast<size_t>(x)];
        if (y != 0) proj.push_back(y);
    }
    if (genus_total(MonodromyVector{&Q.group, proj}) != inv.g)
        throw internal_inconsistency("projected monodromy vector gives a different quotient genus");

    // Ramification by direct orbit count, then the tower Riemann-Hurwitz.
    RamData rd = ramification_data(datum);
    if (rd.r != inv.r)
        throw internal_inconsistency("ramification orbit count disagrees with class formula");
    if (datum.K.order() == 2) (void)ramification_r(datum);  // degree-2 closed form check
    if (2 * inv.g_tilde - 2 != inv.d * (2 * inv.g - 2) + rd.ram_sum)
        throw internal_inconsistency("tower Riemann-Hurwitz identity fails");
    if (inv.q_h < 0) throw internal_inconsistency("negative Prym dimension");

    return inv;
}

CoverInvariants compute_invariants(const PrymDatum& datum) {
    validate(datum);
    CharacterTable tab = character_table(*datum.group);
    return compute_invariants(datum, tab);
}

} // namespace prym
