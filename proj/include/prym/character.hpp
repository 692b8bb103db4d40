#pragma once

#include "prym/cyclotomic.hpp"
#include "prym/group.hpp"

#include <vector>

namespace prym {

// A class function: one exact cyclotomic value per conjugacy class, with the
// group's exponent as the common conductor.
using Character = std::vector<Cyclotomic>;

// Exact character table.  Rows are sorted by (degree, lexicographic value
// tuple) so tables are reproducible across runs.  Alongside the cyclotomic
// values the table stores, for every (irreducible, class) pair, the local
// eigenvalue multiplicities N_alpha (the multiset of eigenvalues
// zeta_m^alpha of the representing matrix of a class element of order m);
// these drive the holomorphic-differential multiplicity formula and all
// integer fast paths.
struct CharacterTable {
    const FiniteGroup* group = nullptr;
    ConjugacyClasses classes;
    int irrep_count = 0;
    std::vector<int> degrees;                           // per irrep
    std::vector<Character> values;                      // [irrep][class]
    std::vector<std::vector<std::vector<int>>> eigmult; // [irrep][class][alpha]
    std::vector<std::vector<detail::RootVec>> values_rv;// [irrep][class], integer form
    int trivial_index = -1;
    std::vector<int> frobenius_schur;                   // -1 / 0 / +1 per irrep
    std::vector<int> dual;                              // index of the conjugate irrep
    std::vector<std::vector<char>> kernel_class;        // [irrep][class]: chi(c) = degree

    // Integer helpers precomputed for the multiplicity formula:
    // cw_count[r][c] = degree - N_0  (eigenvalues different from 1),
    // cw_weight[r][c] = sum_alpha alpha * N_alpha.
    std::vector<std::vector<long long>> cw_count;
    std::vector<std::vector<long long>> cw_weight;

    // True iff every element of K acts trivially in irrep r.
    bool kernel_contains(int irrep, const NormalSubgroup& K) const;
};

// Largest group order accepted by the table builder (the splitting pass is
// cubic in the class count, so this is deliberately tighter than the group
// size cap).
inline constexpr int kMaxCharacterTableOrder = 512;

// Burnside--Dixon--Schneider: simultaneous eigenvectors of the class-algebra
// matrices over a prime field F_p with p = 1 (mod exponent), p > 2*sqrt(|G|),
// lifted to exact cyclotomic values through eigenvalue multiplicities.  The
// finished table is verified exactly (row orthogonality, degree square sum);
// verification failure triggers a retry with the next admissible prime.
CharacterTable character_table(const FiniteGroup& G, int order_cap = kMaxCharacterTableOrder);

namespace detail {
// Force the generic (modular splitting) construction even for groups that
// have a closed-form table; used to cross-check the two paths.
CharacterTable character_table_generic(const FiniteGroup& G,
                                       int order_cap = kMaxCharacterTableOrder);
} // namespace detail

// (1/|G|) sum_c |C_c| a(c) conj(b(c)); exact.  Integer-valued for true
// characters; always rational for differences of characters.
Rational inner_product(const CharacterTable& tab, const Character& a, const Character& b);

// g -> (chi(g)^2 + chi(g^2)) / 2.
Character symmetric_square_character(const CharacterTable& tab, const Character& chi);

// Multiplicities N_alpha, alpha = 0..m-1 with m = ord(element):
// N_alpha = (1/m) sum_j chi(element^j) zeta_m^{-alpha j}.  Exact; throws
// internal_inconsistency if any N_alpha fails to be a non-negative integer.
std::vector<long long> eigenvalue_multiplicities(const CharacterTable& tab, const Character& chi,
                                                 int element);

// The trivial character of the table's group.
Character trivial_character(const CharacterTable& tab);

} // namespace prym
