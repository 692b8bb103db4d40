#pragma once

#include "prym/families.hpp"

#include <iosfwd>
#include <memory>
#include <string>
#include <utility>

namespace prym {

// ---- Catalog ---------------------------------------------------------------

struct CatalogEntry {
    std::shared_ptr<const FiniteGroup> group;
};

// Every abelian group of order <= 64 (one invariant-factor chain each),
// dihedral groups D_3..D_16, dicyclic groups of orders 8..32 (as regular
// permutation groups), A_4 and S_4.
std::vector<CatalogEntry> builtin_catalog();

// The three groups behind the small worked cases: C_6, D_3, D_5.
std::vector<CatalogEntry> minimal_catalog();

// ---- Braid moves and canonical forms ---------------------------------------

// Elementary move at 1-based position i (1 <= i <= s-1):
//   (x_i, x_{i+1}) -> (x_i x_{i+1} x_i^{-1}, x_i).
std::vector<int> braid_move(const FiniteGroup& G, const std::vector<int>& mv, int i);
// Its inverse: (x_i, x_{i+1}) -> (x_{i+1}, x_{i+1}^{-1} x_i x_{i+1}).
std::vector<int> braid_move_inverse(const FiniteGroup& G, const std::vector<int>& mv, int i);

// Orientation reversal (x_1..x_s) -> (x_s^{-1}, ..., x_1^{-1}); preserves
// product-one, generation, and every invariant of the datum.
std::vector<int> reversed_inverse(const FiniteGroup& G, const std::vector<int>& mv);

// Lexicographically least element-index tuple among the simultaneous
// conjugates t mv t^{-1}, t in G.
std::vector<int> canonical_tuple(const FiniteGroup& G, const std::vector<int>& mv);
std::string canonical_key(const FiniteGroup& G, const std::vector<int>& mv);

// True if b lies in the orbit of a under braid moves and simultaneous
// conjugation (and, when allow_reversal, orientation reversal).  `budget`
// bounds the number of orbit states visited.
bool braid_equivalent(const FiniteGroup& G, const std::vector<int>& a, const std::vector<int>& b,
                      long long budget = 1000000, bool allow_reversal = true);

// ---- Criteria --------------------------------------------------------------

enum class Criterion { none, noninjective, constant, xiao };

Criterion parse_criterion(const std::string& name);
const char* criterion_name(Criterion crit);

// "xiao" asks for an actual counterexample: the differential must be
// noninjective AND the Prym dimension must beat the conjectured bound.
bool criterion_matches(Criterion crit, const CoverInvariants& inv);

// ---- Enumeration -----------------------------------------------------------

struct Finding {
    int catalog_index = -1;
    std::shared_ptr<const FiniteGroup> group;
    std::string group_token;
    std::vector<int> mv;           // orbit representative (canonical tuple)
    std::vector<int> k_gens;
    std::vector<int> k_elements;
    CoverInvariants inv;
    CriteriaFlags matched;
    std::string key;               // canonical_key(mv)
    long long orbit_size = 0;      // canonical tuples in the merged orbit
    bool braid_unmerged = false;   // set when the orbit walk hit its budget

    OwnedDatum datum() const;
};

struct EnumerateOptions {
    long long gmax = 0;
    Criterion criterion = Criterion::none;
    bool prune = true;             // false = naive full tuple enumeration
    int jobs = 1;
    long long braid_budget = 1000000;
};

// All (braid orbit, K) findings for monodromy vectors of length s in one
// group.  Findings are sorted by (representative tuple, K elements) and each
// one is re-verified through the full character-level computation.
std::vector<Finding> enumerate_block(const std::shared_ptr<const FiniteGroup>& group,
                                     const CharacterTable& tab, int s,
                                     const EnumerateOptions& opt, int catalog_index = 0);

// ---- Scan ------------------------------------------------------------------

struct ScanOptions {
    long long gmax = 0;
    int smax = 0;
    Criterion criterion = Criterion::none;
    int jobs = 1;
    long long braid_budget = 1000000;
};

struct ScanResult {
    std::vector<Finding> findings;                            // emitted order
    std::vector<std::pair<std::string, long long>> group_counts;  // token, findings
};

// Scans catalog groups in order and s = 3..smax within each group; output is
// deterministic and independent of the worker count.  When record_out is set,
// findings are written to it as record lines as each block completes.
ScanResult scan(const std::vector<CatalogEntry>& catalog, const ScanOptions& opt,
                std::ostream* record_out = nullptr);

} // namespace prym
