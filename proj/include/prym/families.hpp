#pragma once

#include "prym/prym.hpp"

#include <memory>

namespace prym {

// A datum that owns its group (the library-level PrymDatum only borrows one).
struct OwnedDatum {
    std::shared_ptr<const FiniteGroup> group;
    std::vector<int> mv;
    NormalSubgroup K;

    PrymDatum view() const { return PrymDatum{group.get(), mv, K}; }
};

// The five one-parameter families of degree-2 towers over four branch points
// with constant Prym image.  For parameter N >= 1:
//
//   class 1: k = 2N+1, G = C2 x C_2k, mv = (1,0),(0,k),(0,2),(1,k-2)
//   class 2: k = 2N-1, G = C2 x C_2k, mv = (1,0),(0,k),(0,1),(1,k-1)
//   class 3: k = N,    G = C2 x C_2k, mv = (1,k-1),(1,k-1),(0,1),(0,1)
//   class 4: k = 2N,   G = C2 x C_2k, mv as in class 2
//   class 5: k = 2N,   G = C_2k,      mv = 1,1,k-1,k-1
//
// K is generated by (1,k) for classes 1-4 and by k for class 5.
OwnedDatum family_datum(int class_id, long long N);

// Closed forms for the expected invariants of family members.
struct FamilyPrediction {
    long long k = 0;
    long long d = 2;
    long long s = 4;
    long long g_tilde = 0;
    long long g = 0;
    long long r = 0;
};
FamilyPrediction family_prediction(int class_id, long long N);

// One verified table row: the datum is built, everything is recomputed from
// scratch, and `match` records whether the closed forms hold together with
// Ntilde = N_invariant = N and the constant-Prym flag.
struct FamilyRow {
    int class_id = 0;
    long long N = 0;
    long long k = 0;
    std::string group_token;
    FamilyPrediction pred;
    CoverInvariants inv;
    bool match = false;
};
FamilyRow verify_family(int class_id, long long N);

} // namespace prym
