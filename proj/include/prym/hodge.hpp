#pragma once

#include "prym/character.hpp"

namespace prym {

// A branch-point monodromy tuple (x_1..x_s) over the line: product one,
// generating, no identity entries.
struct MonodromyVector {
    const FiniteGroup* group = nullptr;
    std::vector<int> entries;

    int branch_count() const { return static_cast<int>(entries.size()); }
};

// Throws invalid_input naming the first violated condition (length, trivial
// entry, product, generation).
void validate_monodromy(const MonodromyVector& mv);

// Genus of the total-space curve: 2g - 2 = |G| (s - 2 - sum 1/m_i).
long long genus_total(const MonodromyVector& mv);

// Same quantity from per-class entry counts (the genus depends only on the
// conjugacy classes of the entries); counts[c] = number of entries in class c.
long long genus_from_class_counts(const FiniteGroup& G, const ConjugacyClasses& cc,
                                  const std::vector<int>& counts);

// The canonical representation H^0(omega) decomposed into irreducibles.
struct HodgeDecomposition {
    std::vector<long long> mu;   // multiplicity per irreducible; mu[trivial] = 0
    long long g_tilde = 0;       // total genus = sum degrees * mu
    Character chi_V;             // its character
};

// Multiplicity of each nontrivial irreducible rho in H^0(omega):
//   mu(rho) = -deg(rho) + sum_i sum_{alpha=1}^{m_i - 1} N_{i,alpha} (1 - alpha/m_i),
// with N the local eigenvalue multiplicities; the trivial multiplicity is 0
// because the base is the line.  Exactness and the Riemann–Hurwitz total are
// verified on every call.
HodgeDecomposition chevalley_weil(const MonodromyVector& mv, const CharacterTable& tab);

// Integer core of the formula above, from class counts alone.
std::vector<long long> multiplicities_from_class_counts(const CharacterTable& tab,
                                                        const std::vector<int>& counts);

// The split V = V_+ (K acts trivially) + V_- and the quotient-curve genus
// g = dim V_+.
struct PlusPart {
    long long g = 0;
    Character chi_plus;
    Character chi_minus;
    std::vector<long long> mu_plus;   // mu with non-K-kernel rows zeroed
};

PlusPart plus_part(const HodgeDecomposition& hd, const CharacterTable& tab, const NormalSubgroup& K);

// Dimension of the positive-dimensional family through the cover: s - 3.
int family_dimension(const MonodromyVector& mv);

} // namespace prym
