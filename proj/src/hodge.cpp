#include "prym/hodge.hpp"

#include "prym/errors.hpp"

#include <numeric>

namespace prym {

namespace {

std::vector<int> class_counts(const MonodromyVector& mv, const ConjugacyClasses& cc) {
    std::vector<int> counts(static_cast<size_t>(cc.count), 0);
    for (int x : mv.entries) ++counts[static_cast<size_t>(cc.class_of[static_cast<size_t>(x)])];
    return counts;
}

} // namespace

void validate_monodromy(const MonodromyVector& mv) {
    const FiniteGroup& G = *mv.group;
    if (mv.branch_count() < 3)
        throw invalid_input("monodromy vector needs at least 3 entries, got " +
                            std::to_string(mv.branch_count()));
    int prod = 0;
    for (size_t i = 0; i < mv.entries.size(); ++i) {
        int x = mv.entries[i];
        if (x < 0 || x >= G.order()) throw invalid_input("monodromy entry index out of range");
        if (x == 0)
            throw invalid_input("monodromy entry " + std::to_string(i + 1) +
                                " is the identity (trivial branch points are not stored)");
        prod = G.mul(prod, x);
    }
    if (prod != 0) throw invalid_input("monodromy entries do not multiply to the identity");
    if (!is_generating(G, mv.entries))
        throw invalid_input("monodromy entries do not generate the group");
}

long long genus_from_class_counts(const FiniteGroup& G, const ConjugacyClasses& cc,
                                  const std::vector<int>& counts) {
    const long long n = G.order();
    long long s = 0;
    // 2g - 2 = n (s - 2) - sum over branch points of n / m_i.
    long long twog2 = 0;
    for (int c = 0; c < cc.count; ++c) {
        const long long t = counts[static_cast<size_t>(c)];
        if (t == 0) continue;
        s += t;
        twog2 -= t * (n / cc.rep_order[static_cast<size_t>(c)]);
    }
    twog2 += n * (s - 2);
    if (twog2 % 2 != 0)
        throw invalid_input("Riemann-Hurwitz count is odd; no cover with these local orders exists");
    long long g = twog2 / 2 + 1;
    if (g < 0) throw invalid_input("Riemann-Hurwitz genus is negative");
    return g;
}

long long genus_total(const MonodromyVector& mv) {
    ConjugacyClasses cc = conjugacy_classes(*mv.group);
    return genus_from_class_counts(*mv.group, cc, class_counts(mv, cc));
}

std::vector<long long> multiplicities_from_class_counts(const CharacterTable& tab,
                                                        const std::vector<int>& counts) {
    const int k = tab.irrep_count;
    const long long e = tab.group->exponent();
    std::vector<long long> mu(static_cast<size_t>(k), 0);
    for (int r = 0; r < k; ++r) {
        if (r == tab.trivial_index) continue;   // the base is the line
        long long whole = -tab.degrees[static_cast<size_t>(r)];
        long long frac_num = 0;   // accumulated over the common denominator e
        for (int c = 0; c < k; ++c) {
            const long long t = counts[static_cast<size_t>(c)];
            if (t == 0) continue;
            whole += t * tab.cw_count[static_cast<size_t>(r)][static_cast<size_t>(c)];
            frac_num += t * tab.cw_weight[static_cast<size_t>(r)][static_cast<size_t>(c)] *
                        (e / tab.classes.rep_order[static_cast<size_t>(c)]);
        }
        if (frac_num % e != 0)
            throw internal_inconsistency("holomorphic-differential multiplicity is not integral");
        const long long m = whole - frac_num / e;
        if (m < 0) throw internal_inconsistency("holomorphic-differential multiplicity is negative");
        mu[static_cast<size_t>(r)] = m;
    }
    // Cross-check against Riemann–Hurwitz on every evaluation.
    long long total = 0;
    for (int r = 0; r < k; ++r) total += mu[static_cast<size_t>(r)] * tab.degrees[static_cast<size_t>(r)];
    if (total != genus_from_class_counts(*tab.group, tab.classes, counts))
        throw internal_inconsistency(
            "multiplicity total disagrees with the Riemann-Hurwitz genus");
    return mu;
}

HodgeDecomposition chevalley_weil(const MonodromyVector& mv, const CharacterTable& tab) {
    validate_monodromy(mv);
    if (mv.group != tab.group) throw invalid_input("monodromy vector and table use different groups");
    auto counts = class_counts(mv, tab.classes);
    HodgeDecomposition hd;
    hd.mu = multiplicities_from_class_counts(tab, counts);
    hd.g_tilde = 0;
    for (int r = 0; r < tab.irrep_count; ++r)
        hd.g_tilde += hd.mu[static_cast<size_t>(r)] * tab.degrees[static_cast<size_t>(r)];
    const int e = tab.group->exponent();
    hd.chi_V.assign(static_cast<size_t>(tab.irrep_count), Cyclotomic(e));
    for (int r = 0; r < tab.irrep_count; ++r) {
        if (hd.mu[static_cast<size_t>(r)] == 0) continue;
        for (int c = 0; c < tab.irrep_count; ++c) {
            Cyclotomic term = tab.values[static_cast<size_t>(r)][static_cast<size_t>(c)];
            term.scale(Rational(hd.mu[static_cast<size_t>(r)]));
            hd.chi_V[static_cast<size_t>(c)] += term;
        }
    }
    return hd;
}

PlusPart plus_part(const HodgeDecomposition& hd, const CharacterTable& tab, const NormalSubgroup& K) {
    const int k = tab.irrep_count;
    const int e = tab.group->exponent();
    PlusPart out;
    out.mu_plus.assign(static_cast<size_t>(k), 0);
    out.chi_plus.assign(static_cast<size_t>(k), Cyclotomic(e));
    for (int r = 0; r < k; ++r) {
        if (hd.mu[static_cast<size_t>(r)] == 0) continue;
        if (!tab.kernel_contains(r, K)) continue;
        out.mu_plus[static_cast<size_t>(r)] = hd.mu[static_cast<size_t>(r)];
        out.g += hd.mu[static_cast<size_t>(r)] * tab.degrees[static_cast<size_t>(r)];
        for (int c = 0; c < k; ++c) {
            Cyclotomic term = tab.values[static_cast<size_t>(r)][static_cast<size_t>(c)];
            term.scale(Rational(hd.mu[static_cast<size_t>(r)]));
            out.chi_plus[static_cast<size_t>(c)] += term;
        }
    }
    out.chi_minus = hd.chi_V;
    for (int c = 0; c < k; ++c) out.chi_minus[static_cast<size_t>(c)] -= out.chi_plus[static_cast<size_t>(c)];
    return out;
}

int family_dimension(const MonodromyVector& mv) {
    if (mv.branch_count() < 3) throw invalid_input("monodromy vector needs at least 3 entries");
    return mv.branch_count() - 3;
}

} // namespace prym
