#include "prym/search.hpp"
#include "prym/errors.hpp"
#include "prym/io.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

namespace prym {

// ---- Catalog ---------------------------------------------------------------

namespace {

constexpr int kCatalogOrderCap = 64;

void abelian_chains(std::vector<int>& chain, int product, std::vector<std::vector<int>>& out) {
    if (!chain.empty()) out.push_back(chain);
    const int last = chain.empty() ? 1 : chain.back();
    for (int f = last < 2 ? 2 : last; product * f <= kCatalogOrderCap; f += last < 2 ? 1 : last) {
        chain.push_back(f);
        abelian_chains(chain, product * f, out);
        chain.pop_back();
    }
}

std::shared_ptr<const FiniteGroup> dihedral_group(int m) {
    std::vector<int> rot(static_cast<size_t>(m)), refl(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        rot[static_cast<size_t>(i)] = (i + 1) % m;
        refl[static_cast<size_t>(i)] = (m - i) % m;
    }
    auto G = std::make_shared<FiniteGroup>(make_permutation_group(m, {rot, refl}));
    if (G->order() != 2 * m) throw internal_inconsistency("dihedral construction has wrong order");
    return G;
}

std::shared_ptr<const FiniteGroup> dicyclic_group(int m) {
    // Elements a^i b^j (0 <= i < 2m, j in {0,1}) with b^2 = a^m, b a b^-1 = a^-1,
    // realized by left translation on themselves.
    const int order = 4 * m;
    auto idx = [m](int i, int j) { return ((i % (2 * m) + 2 * m) % (2 * m)) * 2 + j; };
    auto mul = [m, idx](int x, int y) {
        const int i = x / 2, j = x % 2, i2 = y / 2, j2 = y % 2;
        if (j == 0) return idx(i + i2, j2);
        if (j2 == 0) return idx(i - i2, 1);
        return idx(i - i2 + m, 0);
    };
    std::vector<std::vector<int>> gens;
    for (int g : {idx(1, 0), idx(0, 1)}) {
        std::vector<int> p(static_cast<size_t>(order));
        for (int x = 0; x < order; ++x) p[static_cast<size_t>(x)] = mul(g, x);
        gens.push_back(std::move(p));
    }
    auto G = std::make_shared<FiniteGroup>(make_permutation_group(order, gens));
    if (G->order() != order) throw internal_inconsistency("dicyclic construction has wrong order");
    return G;
}

std::shared_ptr<const FiniteGroup> alternating4() {
    return std::make_shared<FiniteGroup>(make_permutation_group(4, {{1, 2, 0, 3}, {1, 0, 3, 2}}));
}

std::shared_ptr<const FiniteGroup> symmetric4() {
    return std::make_shared<FiniteGroup>(make_permutation_group(4, {{1, 2, 3, 0}, {1, 0, 2, 3}}));
}

} // namespace

std::vector<CatalogEntry> builtin_catalog() {
    std::vector<CatalogEntry> out;
    std::vector<std::vector<int>> chains;
    {
        std::vector<int> chain;
        abelian_chains(chain, 1, chains);
        std::sort(chains.begin(), chains.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
            long long pa = 1, pb = 1;
            for (int f : a) pa *= f;
            for (int f : b) pb *= f;
            if (pa != pb) return pa < pb;
            return a < b;
        });
    }
    for (const auto& chain : chains)
        out.push_back({std::make_shared<FiniteGroup>(make_abelian(chain))});
    for (int m = 3; m <= 16; ++m) out.push_back({dihedral_group(m)});
    for (int m = 2; m <= 8; ++m) out.push_back({dicyclic_group(m)});
    out.push_back({alternating4()});
    out.push_back({symmetric4()});
    return out;
}

std::vector<CatalogEntry> minimal_catalog() {
    std::vector<CatalogEntry> out;
    out.push_back({std::make_shared<FiniteGroup>(make_abelian({6}))});
    out.push_back({dihedral_group(3)});
    out.push_back({dihedral_group(5)});
    return out;
}

// ---- Braid moves and canonical forms ---------------------------------------

std::vector<int> braid_move(const FiniteGroup& G, const std::vector<int>& mv, int i) {
    if (i < 1 || static_cast<size_t>(i) >= mv.size())
        throw invalid_input("braid move position out of range");
    std::vector<int> out = mv;
    const int a = mv[static_cast<size_t>(i - 1)];
    const int b = mv[static_cast<size_t>(i)];
    out[static_cast<size_t>(i - 1)] = G.conj(a, b);
    out[static_cast<size_t>(i)] = a;
    return out;
}

std::vector<int> braid_move_inverse(const FiniteGroup& G, const std::vector<int>& mv, int i) {
    if (i < 1 || static_cast<size_t>(i) >= mv.size())
        throw invalid_input("braid move position out of range");
    std::vector<int> out = mv;
    const int a = mv[static_cast<size_t>(i - 1)];
    const int b = mv[static_cast<size_t>(i)];
    out[static_cast<size_t>(i - 1)] = b;
    out[static_cast<size_t>(i)] = G.conj(G.inv(b), a);
    return out;
}

std::vector<int> reversed_inverse(const FiniteGroup& G, const std::vector<int>& mv) {
    std::vector<int> out(mv.size());
    for (size_t i = 0; i < mv.size(); ++i) out[mv.size() - 1 - i] = G.inv(mv[i]);
    return out;
}

std::vector<int> canonical_tuple(const FiniteGroup& G, const std::vector<int>& mv) {
    if (G.commutative()) {
        // Conjugation is trivial and braid moves are adjacent swaps, so the
        // braid orbit is every reordering: sort to canonicalize.
        std::vector<int> out = mv;
        std::sort(out.begin(), out.end());
        return out;
    }
    std::vector<int> best = mv;
    std::vector<int> cur(mv.size());
    for (int t = 1; t < G.order(); ++t) {
        for (size_t i = 0; i < mv.size(); ++i) cur[i] = G.conj(t, mv[i]);
        if (cur < best) best = cur;
    }
    return best;
}

std::string canonical_key(const FiniteGroup& G, const std::vector<int>& mv) {
    std::vector<int> canon = canonical_tuple(G, mv);
    std::ostringstream out;
    for (size_t i = 0; i < canon.size(); ++i) {
        if (i) out << ',';
        out << canon[i];
    }
    return out.str();
}

bool braid_equivalent(const FiniteGroup& G, const std::vector<int>& a, const std::vector<int>& b,
                      long long budget, bool allow_reversal) {
    if (a.size() != b.size()) return false;
    const std::vector<int> target = canonical_tuple(G, b);
    std::vector<int> start = canonical_tuple(G, a);
    if (start == target) return true;
    std::set<std::vector<int>> seen{start};
    std::vector<std::vector<int>> queue{start};
    const int s = static_cast<int>(a.size());
    for (size_t head = 0; head < queue.size(); ++head) {
        if (static_cast<long long>(seen.size()) > budget)
            throw too_large("braid orbit walk exceeded its budget");
        std::vector<int> cur = queue[head];
        std::vector<std::vector<int>> next;
        for (int i = 1; i < s; ++i) {
            next.push_back(canonical_tuple(G, braid_move(G, cur, i)));
            next.push_back(canonical_tuple(G, braid_move_inverse(G, cur, i)));
        }
        if (allow_reversal) next.push_back(canonical_tuple(G, reversed_inverse(G, cur)));
        for (auto& form : next) {
            if (form == target) return true;
            if (seen.insert(form).second) queue.push_back(form);
        }
    }
    return false;
}

// ---- Criteria --------------------------------------------------------------

Criterion parse_criterion(const std::string& name) {
    if (name == "none") return Criterion::none;
    if (name == "noninj") return Criterion::noninjective;
    if (name == "constant") return Criterion::constant;
    if (name == "xiao") return Criterion::xiao;
    throw invalid_input("unknown criterion '" + name + "' (expected noninj, constant or xiao)");
}

const char* criterion_name(Criterion crit) {
    switch (crit) {
        case Criterion::none: return "none";
        case Criterion::noninjective: return "noninj";
        case Criterion::constant: return "constant";
        case Criterion::xiao: return "xiao";
    }
    return "?";
}

bool criterion_matches(Criterion crit, const CoverInvariants& inv) {
    switch (crit) {
        case Criterion::none: return true;
        case Criterion::noninjective: return inv.noninjective;
        case Criterion::constant: return inv.constant_prym;
        case Criterion::xiao: return inv.noninjective && inv.xiao;
    }
    return false;
}

// ---- Block enumeration -----------------------------------------------------

OwnedDatum Finding::datum() const {
    OwnedDatum out;
    out.group = group;
    out.mv = mv;
    out.K = subgroup_from_generators(*group, k_gens);
    return out;
}

namespace {

struct MsOrbits {
    std::vector<int> counts;
    std::vector<std::vector<int>> forms;   // sorted canonical tuples
    std::vector<int> orbit_of;             // per form, local orbit id
    int orbit_count = 0;
    bool budget_exceeded = false;
};

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    }
};

bool inv_equal(const CoverInvariants& a, const CoverInvariants& b) { return a == b; }

// Abelianization data for the multiset-level product test.
struct AbImage {
    // For commutative groups the group itself; otherwise the quotient by the
    // commutator subgroup.  class_image[c] is the image of class c.
    std::optional<QuotientGroup> quotient;
    const FiniteGroup* ab = nullptr;
    std::vector<int> class_image;
};

AbImage abelianization(const FiniteGroup& G, const ConjugacyClasses& cc) {
    AbImage out;
    if (G.commutative()) {
        out.ab = &G;
        out.class_image.resize(static_cast<size_t>(cc.count));
        for (int c = 0; c < cc.count; ++c)
            out.class_image[static_cast<size_t>(c)] = cc.representatives[static_cast<size_t>(c)];
        return out;
    }
    std::vector<int> commutators;
    for (int x = 0; x < G.order(); ++x)
        for (int y = 0; y < G.order(); ++y)
            commutators.push_back(G.mul(G.mul(x, y), G.inv(G.mul(y, x))));
    NormalSubgroup D = make_normal_subgroup(G, commutators);
    out.quotient = quotient_group(G, D);
    out.ab = &out.quotient->group;
    out.class_image.resize(static_cast<size_t>(cc.count));
    for (int c = 0; c < cc.count; ++c)
        out.class_image[static_cast<size_t>(c)] =
            out.quotient->projection[static_cast<size_t>(cc.representatives[static_cast<size_t>(c)])];
    return out;
}

bool multiset_product_possible(const AbImage& ab, const std::vector<int>& counts) {
    int acc = 0;
    for (size_t c = 0; c < counts.size(); ++c)
        for (int t = 0; t < counts[c]; ++t) acc = ab.ab->mul(acc, ab.class_image[c]);
    return acc == 0;
}

bool multiset_support_generates(const FiniteGroup& G, const ConjugacyClasses& cc,
                                const std::vector<int>& counts) {
    std::vector<int> gens;
    for (size_t c = 0; c < counts.size(); ++c)
        if (counts[c] > 0)
            for (int x : cc.members[c]) gens.push_back(x);
    if (gens.empty()) return false;
    return static_cast<int>(subgroup_closure(G, gens).size()) == G.order();
}

// Class-count vectors that could carry a generating product-one tuple of
// length s with total genus in [0, gmax]: arithmetic, abelianization and
// support tests only.
std::vector<std::vector<int>> admissible_multisets(const FiniteGroup& G, const ConjugacyClasses& cc,
                                                   const AbImage& ab, int s, long long gmax) {
    const long long n = G.order();
    const int k = cc.count;
    std::vector<long long> weight(static_cast<size_t>(k), 0);
    for (int c = 1; c < k; ++c)
        weight[static_cast<size_t>(c)] = n / cc.rep_order[static_cast<size_t>(c)];
    // Suffix extremes of the per-entry weight over classes >= c.
    std::vector<long long> max_tail(static_cast<size_t>(k) + 1, 0),
        min_tail(static_cast<size_t>(k) + 1, std::numeric_limits<long long>::max() / 4);
    for (int c = k - 1; c >= 1; --c) {
        max_tail[static_cast<size_t>(c)] = std::max(max_tail[static_cast<size_t>(c) + 1], weight[static_cast<size_t>(c)]);
        min_tail[static_cast<size_t>(c)] = std::min(min_tail[static_cast<size_t>(c) + 1], weight[static_cast<size_t>(c)]);
    }
    const long long lo = n * (s - 2) - (2 * gmax - 2);
    const long long hi = n * (s - 2) + 2;

    std::vector<std::vector<int>> out;
    std::vector<int> counts(static_cast<size_t>(k), 0);
    std::function<void(int, int, long long)> rec = [&](int c, int slots, long long sum) {
        if (slots == 0) {
            const long long two_g_minus_2 = n * (s - 2) - sum;
            if (two_g_minus_2 < -2 || two_g_minus_2 % 2 != 0) return;
            const long long g_tilde = (two_g_minus_2 + 2) / 2;
            if (g_tilde < 0 || g_tilde > gmax) return;
            if (!multiset_product_possible(ab, counts)) return;
            if (!multiset_support_generates(G, cc, counts)) return;
            out.push_back(counts);
            return;
        }
        if (c >= k) return;
        if (sum + slots * max_tail[static_cast<size_t>(c)] < lo) return;
        if (sum + slots * min_tail[static_cast<size_t>(c)] > hi) return;
        for (int t = slots; t >= 0; --t) {
            if (t > 0) {
                const long long add = t * weight[static_cast<size_t>(c)];
                if (sum + add > hi) continue;
            }
            counts[static_cast<size_t>(c)] = t;
            rec(c + 1, slots - t, sum + t * weight[static_cast<size_t>(c)]);
        }
        counts[static_cast<size_t>(c)] = 0;
    };
    rec(1, s, 0);
    std::sort(out.begin(), out.end());
    return out;
}

// All valid tuples of one class multiset, grouped into braid orbits of
// conjugation-canonical forms.
MsOrbits make_orbits(const FiniteGroup& G, const ConjugacyClasses& cc, int s,
                     const std::vector<int>& counts, long long braid_budget) {
    MsOrbits out;
    out.counts = counts;
    if (G.commutative()) {
        // Every ordering is braid-reachable from every other (moves are
        // adjacent swaps) and conjugation is trivial; the sorted tuple is the
        // canonical representative, and validity was settled at the
        // multiset level.
        std::vector<int> form;
        for (size_t c = 0; c < counts.size(); ++c)
            for (int t = 0; t < counts[c]; ++t)
                form.push_back(cc.representatives[c]);
        std::sort(form.begin(), form.end());
        out.forms.push_back(std::move(form));
        out.orbit_of.push_back(0);
        out.orbit_count = 1;
        return out;
    }

    const int n = G.order();
    std::set<std::vector<int>> S;
    std::vector<int> rem = counts;
    std::vector<int> tuple(static_cast<size_t>(s));
    std::function<void(int, int)> rec = [&](int pos, int prefix) {
        if (pos == s - 1) {
            const int x = G.inv(prefix);
            if (x == 0) return;
            const int c = cc.class_of[static_cast<size_t>(x)];
            if (rem[static_cast<size_t>(c)] == 0) return;
            tuple[static_cast<size_t>(pos)] = x;
            if (static_cast<int>(subgroup_closure(G, tuple).size()) != n) return;
            S.insert(canonical_tuple(G, tuple));
            return;
        }
        for (size_t c = 1; c < rem.size(); ++c) {
            if (rem[c] == 0) continue;
            --rem[c];
            for (int x : cc.members[c]) {
                tuple[static_cast<size_t>(pos)] = x;
                rec(pos + 1, G.mul(prefix, x));
            }
            ++rem[c];
        }
    };
    rec(0, 0);

    out.forms.assign(S.begin(), S.end());
    const auto index_of = [&](const std::vector<int>& form) {
        auto it = std::lower_bound(out.forms.begin(), out.forms.end(), form);
        if (it == out.forms.end() || *it != form)
            throw internal_inconsistency("braid move left the set of valid tuples");
        return static_cast<int>(it - out.forms.begin());
    };
    out.orbit_of.assign(out.forms.size(), -1);
    for (size_t seed = 0; seed < out.forms.size(); ++seed) {
        if (out.orbit_of[seed] != -1) continue;
        const int orbit = out.orbit_count++;
        std::vector<int> queue{static_cast<int>(seed)};
        out.orbit_of[seed] = orbit;
        long long visited = 1;
        for (size_t head = 0; head < queue.size(); ++head) {
            if (visited > braid_budget) {
                out.budget_exceeded = true;
                break;
            }
            const std::vector<int>& cur = out.forms[static_cast<size_t>(queue[head])];
            for (int i = 1; i < s; ++i) {
                for (const std::vector<int>& moved :
                     {braid_move(G, cur, i), braid_move_inverse(G, cur, i)}) {
                    const int idx = index_of(canonical_tuple(G, moved));
                    if (out.orbit_of[static_cast<size_t>(idx)] == -1) {
                        out.orbit_of[static_cast<size_t>(idx)] = orbit;
                        queue.push_back(idx);
                        ++visited;
                    }
                }
            }
        }
    }
    return out;
}

std::vector<Finding> finish_block(const std::shared_ptr<const FiniteGroup>& group,
                                  const CharacterTable& tab, int /*s*/, const EnumerateOptions& opt,
                                  int catalog_index, std::vector<MsOrbits>& blocks) {
    const FiniteGroup& G = *group;
    const ConjugacyClasses& cc = tab.classes;
    std::vector<Finding> findings;

    std::vector<NormalSubgroup> candidates;
    for (NormalSubgroup& H : all_normal_subgroups(G, cc))
        if (H.order() >= 2 && H.order() < G.order()) candidates.push_back(std::move(H));
    if (candidates.empty()) return findings;

    // Matching (K, invariants) pairs per multiset.
    struct KInv {
        size_t kidx;
        CoverInvariants inv;
    };
    std::vector<std::vector<KInv>> matches(blocks.size());
    for (size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].forms.empty()) continue;
        for (size_t kidx = 0; kidx < candidates.size(); ++kidx) {
            CoverInvariants inv =
                invariants_from_class_counts(tab, blocks[b].counts, candidates[kidx]);
            if (inv.g_tilde <= opt.gmax && criterion_matches(opt.criterion, inv))
                matches[b].push_back({kidx, inv});
        }
    }

    // Global orbit ids and a form lookup across the whole block.
    std::vector<int> base(blocks.size(), 0);
    int total = 0;
    for (size_t b = 0; b < blocks.size(); ++b) {
        base[b] = total;
        total += blocks[b].orbit_count;
    }
    if (total == 0) return findings;
    std::map<std::vector<int>, std::pair<size_t, size_t>> form_loc;  // form -> (block, form idx)
    for (size_t b = 0; b < blocks.size(); ++b)
        for (size_t f = 0; f < blocks[b].forms.size(); ++f)
            form_loc[blocks[b].forms[f]] = {b, f};

    std::vector<std::vector<int>> rep(static_cast<size_t>(total));
    std::vector<long long> fcount(static_cast<size_t>(total), 0);
    std::vector<size_t> rep_block(static_cast<size_t>(total), 0);
    for (size_t b = 0; b < blocks.size(); ++b)
        for (size_t f = 0; f < blocks[b].forms.size(); ++f) {
            const int gid = base[b] + blocks[b].orbit_of[f];
            ++fcount[static_cast<size_t>(gid)];
            if (rep[static_cast<size_t>(gid)].empty() || blocks[b].forms[f] < rep[static_cast<size_t>(gid)]) {
                rep[static_cast<size_t>(gid)] = blocks[b].forms[f];
                rep_block[static_cast<size_t>(gid)] = b;
            }
        }

    // Orientation-reversal merge: image of an orbit under reversal is again a
    // braid orbit, so one lookup per orbit representative suffices.
    UnionFind uf(total);
    for (int gid = 0; gid < total; ++gid) {
        const std::vector<int> twin = canonical_tuple(G, reversed_inverse(G, rep[static_cast<size_t>(gid)]));
        auto it = form_loc.find(twin);
        if (it == form_loc.end()) {
            if (blocks[rep_block[static_cast<size_t>(gid)]].budget_exceeded) continue;
            throw internal_inconsistency("reversed orbit representative is not among the valid tuples");
        }
        uf.unite(gid, base[it->second.first] +
                          blocks[it->second.first].orbit_of[it->second.second]);
    }

    struct Merged {
        std::vector<int> rep;
        size_t rep_block = 0;
        long long size = 0;
        bool unmerged = false;
        std::vector<size_t> member_blocks;
    };
    std::map<int, Merged> classes;
    for (int gid = 0; gid < total; ++gid) {
        Merged& mc = classes[uf.find(gid)];
        if (mc.rep.empty() || rep[static_cast<size_t>(gid)] < mc.rep) {
            mc.rep = rep[static_cast<size_t>(gid)];
            mc.rep_block = rep_block[static_cast<size_t>(gid)];
        }
        mc.size += fcount[static_cast<size_t>(gid)];
        mc.unmerged = mc.unmerged || blocks[rep_block[static_cast<size_t>(gid)]].budget_exceeded;
        mc.member_blocks.push_back(rep_block[static_cast<size_t>(gid)]);
    }

    for (auto& [root, mc] : classes) {
        (void)root;
        const std::vector<KInv>& klist = matches[mc.rep_block];
        // Any multiset merged into this class must carry the identical
        // invariant record for every K.
        for (size_t b : mc.member_blocks) {
            if (b == mc.rep_block) continue;
            if (matches[b].size() != klist.size())
                throw internal_inconsistency("merged orbits disagree on matching subgroups");
            for (size_t j = 0; j < klist.size(); ++j)
                if (matches[b][j].kidx != klist[j].kidx || !inv_equal(matches[b][j].inv, klist[j].inv))
                    throw internal_inconsistency("merged orbits disagree on invariants");
        }
        for (const KInv& ki : klist) {
            const NormalSubgroup& K = candidates[ki.kidx];
            Finding f;
            f.catalog_index = catalog_index;
            f.group = group;
            f.group_token = G.token();
            f.mv = mc.rep;
            f.k_gens = K.generators;
            f.k_elements = K.elements;
            f.inv = ki.inv;
            f.matched = check_criteria(ki.inv.Ntilde, ki.inv.N, ki.inv.s, ki.inv.g_tilde, ki.inv.g);
            f.key = canonical_key(G, mc.rep);
            f.orbit_size = mc.size;
            f.braid_unmerged = mc.unmerged;

            // Full re-verification through the character-level path.
            PrymDatum datum{group.get(), f.mv, K};
            CoverInvariants full = compute_invariants(datum, tab);
            if (!inv_equal(full, ki.inv))
                throw internal_inconsistency("fast-path invariants disagree with full recomputation");
            if (canonical_tuple(G, f.mv) != f.mv)
                throw internal_inconsistency("orbit representative is not in canonical form");
            findings.push_back(std::move(f));
        }
    }

    std::sort(findings.begin(), findings.end(), [](const Finding& a, const Finding& b) {
        if (a.mv != b.mv) return a.mv < b.mv;
        return a.k_elements < b.k_elements;
    });
    return findings;
}

std::vector<MsOrbits> orbits_parallel(const FiniteGroup& G, const ConjugacyClasses& cc, int s,
                                      const std::vector<std::vector<int>>& multisets,
                                      long long braid_budget, int jobs) {
    std::vector<MsOrbits> blocks(multisets.size());
    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(multisets.size())));
    if (workers == 1) {
        for (size_t i = 0; i < multisets.size(); ++i)
            blocks[i] = make_orbits(G, cc, s, multisets[i], braid_budget);
        return blocks;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&]() {
        try {
            for (size_t i = next.fetch_add(1); i < multisets.size(); i = next.fetch_add(1))
                blocks[i] = make_orbits(G, cc, s, multisets[i], braid_budget);
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return blocks;
}

} // namespace

std::vector<Finding> enumerate_block(const std::shared_ptr<const FiniteGroup>& group,
                                     const CharacterTable& tab, int s,
                                     const EnumerateOptions& opt, int catalog_index) {
    const FiniteGroup& G = *group;
    if (tab.group != group.get())
        throw invalid_input("character table was built for a different group");
    if (s < 3) throw invalid_input("monodromy vectors need at least 3 entries");
    const ConjugacyClasses& cc = tab.classes;

    std::vector<MsOrbits> blocks;
    if (opt.prune) {
        AbImage ab = abelianization(G, cc);
        std::vector<std::vector<int>> multisets = admissible_multisets(G, cc, ab, s, opt.gmax);
        if (multisets.empty()) return {};
        blocks = orbits_parallel(G, cc, s, multisets, opt.braid_budget, opt.jobs);
    } else {
        // Naive reference path: walk every tuple over nonidentity elements.
        std::map<std::vector<int>, std::set<std::vector<int>>> buckets;
        const int n = G.order();
        std::vector<int> tuple(static_cast<size_t>(s));
        std::function<void(int, int)> rec = [&](int pos, int prefix) {
            if (pos == s - 1) {
                const int x = G.inv(prefix);
                if (x == 0) return;
                tuple[static_cast<size_t>(pos)] = x;
                if (static_cast<int>(subgroup_closure(G, tuple).size()) != n) return;
                std::vector<int> counts(static_cast<size_t>(cc.count), 0);
                for (int y : tuple) ++counts[static_cast<size_t>(cc.class_of[static_cast<size_t>(y)])];
                buckets[counts].insert(canonical_tuple(G, tuple));
                return;
            }
            for (int x = 1; x < n; ++x) {
                tuple[static_cast<size_t>(pos)] = x;
                rec(pos + 1, G.mul(prefix, x));
            }
        };
        rec(0, 0);
        for (auto& [counts, forms] : buckets) {
            // Reuse the orbit machinery on the already-known form set.
            MsOrbits ms = make_orbits(G, cc, s, counts, opt.braid_budget);
            if (std::vector<std::vector<int>>(forms.begin(), forms.end()) != ms.forms)
                throw internal_inconsistency("naive and pruned tuple sets disagree");
            blocks.push_back(std::move(ms));
        }
    }
    return finish_block(group, tab, s, opt, catalog_index, blocks);
}

ScanResult scan(const std::vector<CatalogEntry>& catalog, const ScanOptions& opt,
                std::ostream* record_out) {
    if (opt.gmax < 1) throw invalid_input("scan needs a positive genus bound");
    if (opt.smax < 1) throw invalid_input("scan needs a positive branch-point bound");
    if (opt.jobs < 1) throw invalid_input("scan needs a positive worker count");
    ScanResult out;
    for (size_t gi = 0; gi < catalog.size(); ++gi) {
        const std::shared_ptr<const FiniteGroup>& group = catalog[gi].group;
        const FiniteGroup& G = *group;
        long long count = 0;

        // Cheap shape tests before any table is built.
        long long max_weight = 0;
        int rank_bound = 1;
        {
            for (int x = 1; x < G.order(); ++x)
                max_weight = std::max<long long>(max_weight, G.order() / G.element_order(x));
            if (G.kind() == FiniteGroup::Kind::abelian) {
                // Minimal generator count: max over primes of the number of
                // factors the prime divides.
                std::map<int, int> per_prime;
                for (int f : G.factors()) {
                    int rest = f;
                    for (int p = 2; p * p <= rest; ++p)
                        if (rest % p == 0) {
                            ++per_prime[p];
                            while (rest % p == 0) rest /= p;
                        }
                    if (rest > 1) ++per_prime[rest];
                }
                for (const auto& [p, c] : per_prime) {
                    (void)p;
                    rank_bound = std::max(rank_bound, c);
                }
            }
        }

        std::optional<CharacterTable> tab;
        for (int s = 3; s <= opt.smax; ++s) {
            if (G.order() < 4) break;                       // no proper nontrivial K
            if (rank_bound > s - 1) continue;               // cannot generate
            if (static_cast<long long>(s) * max_weight <
                static_cast<long long>(G.order()) * (s - 2) - (2 * opt.gmax - 2))
                continue;                                   // genus bound unreachable
            if (!tab) tab.emplace(character_table(G));
            EnumerateOptions eopt;
            eopt.gmax = opt.gmax;
            eopt.criterion = opt.criterion;
            eopt.prune = true;
            eopt.jobs = opt.jobs;
            eopt.braid_budget = opt.braid_budget;
            std::vector<Finding> found =
                enumerate_block(group, *tab, s, eopt, static_cast<int>(gi));
            for (Finding& f : found) {
                if (record_out) {
                    (*record_out) << format_finding_record(G, f.mv, f.k_gens, f.inv) << "\n";
                    record_out->flush();
                }
                out.findings.push_back(std::move(f));
                ++count;
            }
        }
        out.group_counts.emplace_back(G.token(), count);
    }
    return out;
}

} // namespace prym
