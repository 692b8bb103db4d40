#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace prym {

// A finite group with elements indexed 0..n-1, index 0 the identity, and a
// dense multiplication table.  Groups are immutable after construction and
// safe to share across threads.  Construction validates the table: identity,
// inverses, and (for order <= 200) exhaustive associativity.
class FiniteGroup {
  public:
    enum class Kind { abelian, permutation, quotient };

    int order() const { return n_; }
    int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * static_cast<size_t>(n_) + static_cast<size_t>(b)]; }
    int inv(int a) const { return inv_[static_cast<size_t>(a)]; }
    int conj(int t, int x) const { return mul(mul(t, x), inv(t)); }
    int element_order(int a) const { return elem_order_[static_cast<size_t>(a)]; }
    int exponent() const { return exponent_; }
    bool commutative() const { return commutative_; }
    Kind kind() const { return kind_; }

    // Parseable token naming the group, e.g. "abelian[2,6]" or
    // "perm[5;(1,2,3,4,5);(2,5)(3,4)]".  Quotient groups carry a
    // non-parseable descriptive token.
    const std::string& token() const { return token_; }

    // Cyclic factor orders for Kind::abelian (element index is the
    // mixed-radix encoding with the last factor varying fastest).
    const std::vector<int>& factors() const { return factors_; }

    // Permutation data for Kind::permutation: 0-based image arrays.
    int degree() const { return degree_; }
    const std::vector<int>& perm(int e) const { return perms_[static_cast<size_t>(e)]; }

    // Human/machine-readable element name: comma-separated residues for
    // abelian groups ("1,3"), cycle word for permutation groups ("(1,2)(3,4)",
    // identity "()"), positional fallback for quotients.
    std::string element_name(int e) const;

    // Raw constructor from a multiplication table; validates group axioms.
    static FiniteGroup from_table(std::vector<uint16_t> table, int n, Kind kind, std::string token);

    friend FiniteGroup make_abelian(const std::vector<int>& factors);
    friend FiniteGroup make_permutation_group(int degree, const std::vector<std::vector<int>>& generators,
                                              int element_cap);
    struct QuotientBuild;

  private:
    FiniteGroup() = default;
    void finish_construction();   // inv, orders, exponent, axioms

    int n_ = 0;
    Kind kind_ = Kind::quotient;
    std::vector<uint16_t> mul_;
    std::vector<int> inv_;
    std::vector<int> elem_order_;
    int exponent_ = 1;
    bool commutative_ = true;
    std::string token_;
    std::vector<int> factors_;                // abelian only
    int degree_ = 0;                          // permutation only
    std::vector<std::vector<int>> perms_;     // permutation only
};

// Largest supported group order (dense table size bound).
inline constexpr int kMaxGroupOrder = 4096;

// Direct product of cyclic groups of the given orders (each >= 2).
FiniteGroup make_abelian(const std::vector<int>& factors);

// Closure of the given 0-based permutation image arrays on {0..degree-1}.
// Throws too_large once the closure exceeds element_cap (default 10000) or
// the dense-table bound.  Element indices are assigned by sorting the
// permutations lexicographically, which places the identity at index 0.
FiniteGroup make_permutation_group(int degree, const std::vector<std::vector<int>>& generators,
                                   int element_cap = 10000);

// Conjugacy classes in canonical order: classes sorted by their minimal
// element, so class 0 is {identity} and representatives are minimal members.
struct ConjugacyClasses {
    int count = 0;
    std::vector<int> class_of;              // element -> class index
    std::vector<int> representatives;       // class -> minimal element
    std::vector<int> sizes;
    std::vector<std::vector<int>> members;  // ascending within each class
    std::vector<int> rep_order;             // order of the representative
    // power_map(c, k) = class of rep_c^k for 0 <= k <= exponent.
    std::vector<std::vector<int>> power_map;
    std::vector<int> inverse_class;         // class of rep^{-1}

    int power_class(int c, long long k) const;
};

ConjugacyClasses conjugacy_classes(const FiniteGroup& G);

// Subgroup of G as an explicit sorted element list plus membership bitmask.
// Normality is NOT implied by construction; see is_normal / make_normal_subgroup.
struct NormalSubgroup {
    const FiniteGroup* parent = nullptr;
    std::vector<int> elements;      // sorted ascending, contains 0
    std::vector<uint64_t> mask;
    std::vector<int> generators;    // as supplied
    int index = 0;                  // [G : subgroup]

    int order() const { return static_cast<int>(elements.size()); }
    bool contains(int e) const { return (mask[static_cast<size_t>(e) >> 6] >> (e & 63)) & 1u; }
};

std::vector<int> subgroup_closure(const FiniteGroup& G, const std::vector<int>& gens);
bool is_generating(const FiniteGroup& G, const std::vector<int>& elems);

// True iff g lies in the cyclic subgroup generated by h.
bool cyclic_subgroup_contains(const FiniteGroup& G, int h, int g);

bool is_normal(const FiniteGroup& G, const std::vector<int>& subgroup_elements);

// Builds the subgroup generated by gens without checking normality (the
// validation layer reports normality failures with context).
NormalSubgroup subgroup_from_generators(const FiniteGroup& G, const std::vector<int>& gens);

// As above but throws invalid_input unless the subgroup is normal in G.
NormalSubgroup make_normal_subgroup(const FiniteGroup& G, const std::vector<int>& gens);

struct QuotientGroup {
    FiniteGroup group;
    std::vector<int> projection;   // element of G -> element of quotient
};

// Quotient by a normal subgroup (the whole group is allowed and yields the
// trivial quotient).  Coset indices follow the minimal coset representative,
// so the identity coset is index 0.
QuotientGroup quotient_group(const FiniteGroup& G, const NormalSubgroup& K);

// Every normal subgroup of G including the trivial one and G itself, found
// by closing the set of class normal-closures under join; deterministic
// order: by order, then by element list.
std::vector<NormalSubgroup> all_normal_subgroups(const FiniteGroup& G, const ConjugacyClasses& cc);

} // namespace prym
