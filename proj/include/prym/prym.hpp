#pragma once

#include "prym/hodge.hpp"

namespace prym {

// A tower presentation: monodromy vector for the Galois cover of the line,
// plus the distinguished normal subgroup K cutting out the intermediate
// curve.  The cover degree of the tower's upper map is |K|.
struct PrymDatum {
    const FiniteGroup* group = nullptr;
    std::vector<int> mv;
    NormalSubgroup K;

    MonodromyVector monodromy() const { return MonodromyVector{group, mv}; }
};

// Full numeric record for one datum.
struct CoverInvariants {
    long long d = 0;           // |K|, degree of the upper cover
    long long s = 0;           // number of branch points
    long long g_tilde = 0;     // genus upstairs
    long long g = 0;           // genus of the intermediate quotient
    long long r = 0;           // ramification points of the upper cover
    long long Ntilde = 0;      // dim (S^2 H^0(omega))^G
    long long N = 0;           // dim (S^2 V_+)^G
    long long family_dim = 0;  // s - 3
    long long q_h = 0;         // g_tilde - g
    bool noninjective = false;
    bool constant_prym = false;
    bool xiao = false;
};

inline bool operator==(const CoverInvariants& a, const CoverInvariants& b) {
    return a.d == b.d && a.s == b.s && a.g_tilde == b.g_tilde && a.g == b.g && a.r == b.r &&
           a.Ntilde == b.Ntilde && a.N == b.N && a.family_dim == b.family_dim && a.q_h == b.q_h &&
           a.noninjective == b.noninjective && a.constant_prym == b.constant_prym &&
           a.xiao == b.xiao;
}
inline bool operator!=(const CoverInvariants& a, const CoverInvariants& b) { return !(a == b); }

struct CriteriaFlags {
    bool noninjective = false;
    bool constant_prym = false;
    bool xiao = false;
};

// noninjective  <=>  Ntilde - N < s - 3
// constant_prym <=>  Ntilde = N
// xiao          <=>  2 (g_tilde - g) > g_tilde + 1
CriteriaFlags check_criteria(long long Ntilde, long long N, long long s, long long g_tilde,
                             long long g);

// Throws invalid_input naming the first violated condition: monodromy product,
// generation, trivial entries, K normality, K proper and nontrivial, and for
// |K| = 2 the centrality of its involution.
void validate(const PrymDatum& datum);

// Number of ramification points of the upper cover, by direct orbit count:
// the points over branch point i are the cosets t<x_i>, and such a point is
// ramified iff t<x_i>t^{-1} meets K nontrivially.  For |K| = 2 the closed
// form  r = sum over entries with sigma in <x_i> of |G|/ord(x_i)  is computed
// as well and must agree.
long long ramification_r(const PrymDatum& datum);

// Everything, with all cross-checks on: the symmetric-square dimensions are
// computed both from characters and from the multiplicity/indicator counts,
// Ntilde - N must equal dim (S^2 V_-)^G, the quotient-curve genus must match
// the projected monodromy vector, and the tower Riemann–Hurwitz identity
// 2g~-2 = d(2g-2) + sum (e_P - 1) must hold exactly.
CoverInvariants compute_invariants(const PrymDatum& datum, const CharacterTable& tab);
CoverInvariants compute_invariants(const PrymDatum& datum);   // builds the table itself

// Integer-only evaluation from class counts (counts[c] = number of entries in
// class c).  This is the search fast path; it performs the combinatorial
// cross-checks but skips the character-level and quotient-level ones.
CoverInvariants invariants_from_class_counts(const CharacterTable& tab,
                                             const std::vector<int>& counts,
                                             const NormalSubgroup& K);

// dim (S^2 V)^G for V with the given multiplicity vector, by the
// Frobenius–Schur count: self-dual rows contribute mu(mu+fs)/2, dual pairs
// contribute mu * mu'.
long long sym2_invariants_from_multiplicities(const CharacterTable& tab,
                                              const std::vector<long long>& mult);

} // namespace prym
