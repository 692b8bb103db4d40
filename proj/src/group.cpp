#include "prym/group.hpp"

#include "prym/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace prym {

namespace {

std::vector<uint64_t> empty_mask(int n) {
    return std::vector<uint64_t>(static_cast<size_t>((n + 63) / 64), 0);
}

void mask_set(std::vector<uint64_t>& m, int e) { m[static_cast<size_t>(e) >> 6] |= (uint64_t{1} << (e & 63)); }
bool mask_get(const std::vector<uint64_t>& m, int e) { return (m[static_cast<size_t>(e) >> 6] >> (e & 63)) & 1u; }

std::string cycle_word(const std::vector<int>& img) {
    const int deg = static_cast<int>(img.size());
    std::vector<bool> seen(static_cast<size_t>(deg), false);
    std::ostringstream os;
    bool any = false;
    for (int i = 0; i < deg; ++i) {
        if (seen[static_cast<size_t>(i)] || img[static_cast<size_t>(i)] == i) continue;
        any = true;
        os << '(';
        int j = i;
        bool first = true;
        do {
            if (!first) os << ',';
            os << (j + 1);   // 1-based points
            seen[static_cast<size_t>(j)] = true;
            j = img[static_cast<size_t>(j)];
            first = false;
        } while (j != i);
        os << ')';
    }
    if (!any) return "()";
    return os.str();
}

} // namespace

void FiniteGroup::finish_construction() {
    if (n_ < 1) throw invalid_input("group must have at least one element");
    if (n_ > kMaxGroupOrder)
        throw too_large("group order " + std::to_string(n_) + " exceeds the supported limit " +
                        std::to_string(kMaxGroupOrder));
    // Identity checks.
    for (int a = 0; a < n_; ++a) {
        if (mul(0, a) != a || mul(a, 0) != a)
            throw invalid_input("multiplication table has no identity at index 0");
    }
    // Each row and column must be a permutation; locate inverses.
    inv_.assign(static_cast<size_t>(n_), -1);
    for (int a = 0; a < n_; ++a) {
        std::vector<bool> seen(static_cast<size_t>(n_), false);
        for (int b = 0; b < n_; ++b) {
            int c = mul(a, b);
            if (c < 0 || c >= n_ || seen[static_cast<size_t>(c)])
                throw invalid_input("multiplication table row is not a permutation");
            seen[static_cast<size_t>(c)] = true;
            if (c == 0 && inv_[static_cast<size_t>(a)] == -1) inv_[static_cast<size_t>(a)] = b;
        }
        if (inv_[static_cast<size_t>(a)] == -1) throw invalid_input("element has no inverse");
        if (mul(inv_[static_cast<size_t>(a)], a) != 0) throw invalid_input("inverse is one-sided only");
    }
    // Exhaustive associativity for small orders (cheap and decisive).
    if (n_ <= 200) {
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                for (int c = 0; c < n_; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                        throw invalid_input("multiplication table is not associative");
    }
    // Element orders and exponent.
    elem_order_.assign(static_cast<size_t>(n_), 0);
    long long exponent = 1;
    for (int a = 0; a < n_; ++a) {
        int ord = 1, x = a;
        while (x != 0) {
            x = mul(x, a);
            ++ord;
            if (ord > n_) throw invalid_input("element order exceeds group order");
        }
        elem_order_[static_cast<size_t>(a)] = ord;
        exponent = std::lcm(exponent, static_cast<long long>(ord));
    }
    if (exponent > n_) throw internal_inconsistency("group exponent exceeds group order");
    exponent_ = static_cast<int>(exponent);
    commutative_ = true;
    for (int a = 0; a < n_ && commutative_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (mul(a, b) != mul(b, a)) {
                commutative_ = false;
                break;
            }
}

FiniteGroup FiniteGroup::from_table(std::vector<uint16_t> table, int n, Kind kind, std::string token) {
    if (static_cast<long long>(table.size()) != static_cast<long long>(n) * n)
        throw invalid_input("multiplication table size mismatch");
    FiniteGroup G;
    G.n_ = n;
    G.kind_ = kind;
    G.mul_ = std::move(table);
    G.token_ = std::move(token);
    G.finish_construction();
    return G;
}

std::string FiniteGroup::element_name(int e) const {
    switch (kind_) {
        case Kind::abelian: {
            std::ostringstream os;
            int idx = e;
            std::vector<int> digits(factors_.size());
            for (size_t i = factors_.size(); i-- > 0;) {
                digits[i] = idx % factors_[i];
                idx /= factors_[i];
            }
            for (size_t i = 0; i < digits.size(); ++i) {
                if (i) os << ',';
                os << digits[i];
            }
            return os.str();
        }
        case Kind::permutation:
            return cycle_word(perms_[static_cast<size_t>(e)]);
        case Kind::quotient:
        default:
            return "q" + std::to_string(e);
    }
}

FiniteGroup make_abelian(const std::vector<int>& factors) {
    if (factors.empty()) throw invalid_input("abelian group needs at least one cyclic factor");
    long long order = 1;
    for (int f : factors) {
        if (f < 2) throw invalid_input("cyclic factor orders must be at least 2, got " + std::to_string(f));
        order *= f;
        if (order > kMaxGroupOrder)
            throw too_large("abelian group order exceeds the supported limit " + std::to_string(kMaxGroupOrder));
    }
    const int n = static_cast<int>(order);
    const int m = static_cast<int>(factors.size());
    std::vector<uint16_t> table(static_cast<size_t>(n) * static_cast<size_t>(n));
    std::vector<int> da(static_cast<size_t>(m)), db(static_cast<size_t>(m));
    for (int a = 0; a < n; ++a) {
        int idx = a;
        for (int i = m; i-- > 0;) {
            da[static_cast<size_t>(i)] = idx % factors[static_cast<size_t>(i)];
            idx /= factors[static_cast<size_t>(i)];
        }
        for (int b = 0; b < n; ++b) {
            idx = b;
            for (int i = m; i-- > 0;) {
                db[static_cast<size_t>(i)] = idx % factors[static_cast<size_t>(i)];
                idx /= factors[static_cast<size_t>(i)];
            }
            int c = 0;
            for (int i = 0; i < m; ++i)
                c = c * factors[static_cast<size_t>(i)] +
                    (da[static_cast<size_t>(i)] + db[static_cast<size_t>(i)]) % factors[static_cast<size_t>(i)];
            table[static_cast<size_t>(a) * static_cast<size_t>(n) + static_cast<size_t>(b)] =
                static_cast<uint16_t>(c);
        }
    }
    std::ostringstream tok;
    tok << "abelian[";
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) tok << ',';
        tok << factors[i];
    }
    tok << ']';
    FiniteGroup G;
    G.n_ = n;
    G.kind_ = FiniteGroup::Kind::abelian;
    G.mul_ = std::move(table);
    G.token_ = tok.str();
    G.factors_ = factors;
    G.finish_construction();
    return G;
}

FiniteGroup make_permutation_group(int degree, const std::vector<std::vector<int>>& generators,
                                   int element_cap) {
    if (degree < 1) throw invalid_input("permutation degree must be at least 1");
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != degree)
            throw invalid_input("permutation generator degree mismatch");
        std::vector<bool> seen(static_cast<size_t>(degree), false);
        for (int img : g) {
            if (img < 0 || img >= degree || seen[static_cast<size_t>(img)])
                throw invalid_input("generator is not a permutation of the points");
            seen[static_cast<size_t>(img)] = true;
        }
    }
    std::vector<int> identity(static_cast<size_t>(degree));
    std::iota(identity.begin(), identity.end(), 0);

    std::set<std::vector<int>> closure;
    closure.insert(identity);
    std::vector<std::vector<int>> frontier{identity};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& p : frontier) {
            for (const auto& g : generators) {
                std::vector<int> q(static_cast<size_t>(degree));
                for (int i = 0; i < degree; ++i) q[static_cast<size_t>(i)] = p[static_cast<size_t>(g[static_cast<size_t>(i)])];
                if (closure.insert(q).second) {
                    if (static_cast<int>(closure.size()) > element_cap)
                        throw too_large("permutation group closure exceeds the element cap " +
                                        std::to_string(element_cap));
                    next.push_back(std::move(q));
                }
            }
        }
        frontier = std::move(next);
    }
    const int n = static_cast<int>(closure.size());
    if (n > kMaxGroupOrder)
        throw too_large("permutation group order " + std::to_string(n) +
                        " exceeds the supported limit " + std::to_string(kMaxGroupOrder));
    // std::set iterates in lexicographic order; the identity sorts first.
    std::vector<std::vector<int>> elems(closure.begin(), closure.end());
    std::map<std::vector<int>, int> idx;
    for (int i = 0; i < n; ++i) idx[elems[static_cast<size_t>(i)]] = i;

    std::vector<uint16_t> table(static_cast<size_t>(n) * static_cast<size_t>(n));
    std::vector<int> comp(static_cast<size_t>(degree));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            // Composition convention: (a*b)(x) = a(b(x)).
            for (int i = 0; i < degree; ++i)
                comp[static_cast<size_t>(i)] =
                    elems[static_cast<size_t>(a)][static_cast<size_t>(elems[static_cast<size_t>(b)][static_cast<size_t>(i)])];
            auto it = idx.find(comp);
            if (it == idx.end()) throw internal_inconsistency("permutation closure is not closed");
            table[static_cast<size_t>(a) * static_cast<size_t>(n) + static_cast<size_t>(b)] =
                static_cast<uint16_t>(it->second);
        }
    }
    std::ostringstream tok;
    tok << "perm[" << degree;
    for (const auto& g : generators) tok << ';' << cycle_word(g);
    tok << ']';
    FiniteGroup G;
    G.n_ = n;
    G.kind_ = FiniteGroup::Kind::permutation;
    G.mul_ = std::move(table);
    G.token_ = tok.str();
    G.degree_ = degree;
    G.perms_ = std::move(elems);
    G.finish_construction();
    return G;
}

int ConjugacyClasses::power_class(int c, long long k) const {
    const auto& row = power_map[static_cast<size_t>(c)];
    long long m = rep_order[static_cast<size_t>(c)];
    long long km = ((k % m) + m) % m;
    return row[static_cast<size_t>(km)];
}

ConjugacyClasses conjugacy_classes(const FiniteGroup& G) {
    const int n = G.order();
    ConjugacyClasses cc;
    cc.class_of.assign(static_cast<size_t>(n), -1);
    for (int e = 0; e < n; ++e) {
        if (cc.class_of[static_cast<size_t>(e)] != -1) continue;
        const int c = cc.count++;
        std::vector<int> members;
        // e is the minimal member because elements are swept in ascending order.
        for (int t = 0; t < n; ++t) {
            int x = G.conj(t, e);
            if (cc.class_of[static_cast<size_t>(x)] == -1) {
                cc.class_of[static_cast<size_t>(x)] = c;
                members.push_back(x);
            }
        }
        std::sort(members.begin(), members.end());
        cc.representatives.push_back(e);
        cc.sizes.push_back(static_cast<int>(members.size()));
        cc.members.push_back(std::move(members));
        cc.rep_order.push_back(G.element_order(e));
    }
    cc.power_map.resize(static_cast<size_t>(cc.count));
    cc.inverse_class.resize(static_cast<size_t>(cc.count));
    for (int c = 0; c < cc.count; ++c) {
        auto& row = cc.power_map[static_cast<size_t>(c)];
        row.resize(static_cast<size_t>(G.exponent()) + 1);
        int x = 0;
        const int rep = cc.representatives[static_cast<size_t>(c)];
        for (int k = 0; k <= G.exponent(); ++k) {
            row[static_cast<size_t>(k)] = cc.class_of[static_cast<size_t>(x)];
            x = G.mul(x, rep);
        }
        cc.inverse_class[static_cast<size_t>(c)] = cc.class_of[static_cast<size_t>(G.inv(rep))];
    }
    return cc;
}

std::vector<int> subgroup_closure(const FiniteGroup& G, const std::vector<int>& gens) {
    auto mask = empty_mask(G.order());
    std::vector<int> elems{0};
    mask_set(mask, 0);
    std::vector<int> frontier{0};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier) {
            for (int g : gens) {
                int y = G.mul(x, g);
                if (!mask_get(mask, y)) {
                    mask_set(mask, y);
                    elems.push_back(y);
                    next.push_back(y);
                }
            }
        }
        frontier = std::move(next);
    }
    std::sort(elems.begin(), elems.end());
    return elems;
}

bool is_generating(const FiniteGroup& G, const std::vector<int>& elems) {
    return static_cast<int>(subgroup_closure(G, elems).size()) == G.order();
}

bool cyclic_subgroup_contains(const FiniteGroup& G, int h, int g) {
    int x = 0;
    do {
        if (x == g) return true;
        x = G.mul(x, h);
    } while (x != 0);
    return false;
}

bool is_normal(const FiniteGroup& G, const std::vector<int>& subgroup_elements) {
    auto mask = empty_mask(G.order());
    for (int e : subgroup_elements) mask_set(mask, e);
    for (int t = 0; t < G.order(); ++t)
        for (int x : subgroup_elements)
            if (!mask_get(mask, G.conj(t, x))) return false;
    return true;
}

NormalSubgroup subgroup_from_generators(const FiniteGroup& G, const std::vector<int>& gens) {
    for (int g : gens)
        if (g < 0 || g >= G.order()) throw invalid_input("subgroup generator index out of range");
    NormalSubgroup K;
    K.parent = &G;
    K.elements = subgroup_closure(G, gens);
    K.mask = empty_mask(G.order());
    for (int e : K.elements) mask_set(K.mask, e);
    K.generators = gens;
    K.index = G.order() / K.order();
    return K;
}

NormalSubgroup make_normal_subgroup(const FiniteGroup& G, const std::vector<int>& gens) {
    NormalSubgroup K = subgroup_from_generators(G, gens);
    if (!is_normal(G, K.elements)) throw invalid_input("subgroup is not normal in the group");
    return K;
}

QuotientGroup quotient_group(const FiniteGroup& G, const NormalSubgroup& K) {
    if (!is_normal(G, K.elements)) throw invalid_input("cannot form quotient by a non-normal subgroup");
    const int n = G.order();
    // Coset of e = { e*k : k in K }; label it by its minimal member.
    std::vector<int> coset_min(static_cast<size_t>(n), -1);
    std::vector<int> reps;
    for (int e = 0; e < n; ++e) {
        if (coset_min[static_cast<size_t>(e)] != -1) continue;
        reps.push_back(e);
        for (int k : K.elements) coset_min[static_cast<size_t>(G.mul(e, k))] = e;
    }
    const int q = static_cast<int>(reps.size());
    std::map<int, int> rep_index;
    for (int i = 0; i < q; ++i) rep_index[reps[static_cast<size_t>(i)]] = i;

    std::vector<uint16_t> table(static_cast<size_t>(q) * static_cast<size_t>(q));
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            int prod = G.mul(reps[static_cast<size_t>(a)], reps[static_cast<size_t>(b)]);
            table[static_cast<size_t>(a) * static_cast<size_t>(q) + static_cast<size_t>(b)] =
                static_cast<uint16_t>(rep_index.at(coset_min[static_cast<size_t>(prod)]));
        }
    QuotientGroup out{
        FiniteGroup::from_table(std::move(table), q, FiniteGroup::Kind::quotient,
                                G.token() + "/|K|=" + std::to_string(K.order())),
        {}};
    out.projection.resize(static_cast<size_t>(n));
    for (int e = 0; e < n; ++e)
        out.projection[static_cast<size_t>(e)] = rep_index.at(coset_min[static_cast<size_t>(e)]);
    return out;
}

std::vector<NormalSubgroup> all_normal_subgroups(const FiniteGroup& G, const ConjugacyClasses& cc) {
    // Normal closures of single classes, then close the collection under join.
    std::set<std::vector<int>> found;
    found.insert(std::vector<int>{0});
    std::vector<std::vector<int>> class_closures;
    for (int c = 1; c < cc.count; ++c)
        class_closures.push_back(subgroup_closure(G, cc.members[static_cast<size_t>(c)]));

    std::vector<std::vector<int>> frontier(found.begin(), found.end());
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& base : frontier) {
            for (const auto& cls : class_closures) {
                std::vector<int> gens = base;
                gens.insert(gens.end(), cls.begin(), cls.end());
                auto join = subgroup_closure(G, gens);
                if (found.insert(join).second) next.push_back(std::move(join));
            }
        }
        frontier = std::move(next);
    }
    std::vector<NormalSubgroup> out;
    for (const auto& elems : found) {
        NormalSubgroup K;
        K.parent = &G;
        K.elements = elems;
        K.mask = empty_mask(G.order());
        for (int e : elems) mask_set(K.mask, e);
        // A small generating set: greedily add elements not yet generated.
        std::vector<int> gens;
        std::vector<int> have{0};
        for (int e : elems) {
            if (std::binary_search(have.begin(), have.end(), e)) continue;
            gens.push_back(e);
            have = subgroup_closure(G, gens);
            if (have.size() == elems.size()) break;
        }
        K.generators = gens;
        K.index = G.order() / K.order();
        out.push_back(std::move(K));
    }
    std::sort(out.begin(), out.end(), [](const NormalSubgroup& a, const NormalSubgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements < b.elements;
    });
    return out;
}

} // namespace prym
